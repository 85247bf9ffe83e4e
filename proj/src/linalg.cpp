#include "cr/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cr {

SparseMatrix::SparseMatrix(int r, int c) : rows(r), cols(c), row(r) {}

void SparseMatrix::push(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw std::out_of_range("matrix index out of range");
    if (sgn(v) == 0) return;
    auto& R = row[r];
    if (!R.empty() && R.back().first >= c) throw std::invalid_argument("entries must be pushed in column order");
    R.emplace_back(c, v);
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : row) n += r.size();
    return n;
}

std::vector<Rat> SparseMatrix::apply(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("vector length mismatch");
    std::vector<Rat> y(rows);
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : row[r]) y[r] += v * x[c];
    return y;
}

RowEchelon::RowEchelon(int cols) : cols_(cols), pivot_(cols) {}

void RowEchelon::make_primitive(IntRow& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : r) {
        g = gcd(g, v);
        if (g == 1) break;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

RowEchelon::IntRow RowEchelon::to_primitive(const SparseRow& row) {
    mpz_class l = 1;
    for (const auto& [c, v] : row) l = lcm(l, v.get_den());
    IntRow r;
    r.reserve(row.size());
    for (const auto& [c, v] : row) r.emplace_back(c, v.get_num() * (l / v.get_den()));
    make_primitive(r);
    return r;
}

bool RowEchelon::insert(const SparseRow& row) {
    for (const auto& [c, v] : row)
        if (c < 0 || c >= cols_) throw std::out_of_range("column out of range");
    IntRow r = to_primitive(row);
    IntRow next;
    while (!r.empty()) {
        int lead = r.front().first;
        if (!pivot_[lead]) {
            pivot_[lead] = std::move(r);
            ++rank_;
            return true;
        }
        const IntRow& p = *pivot_[lead];
        // r := p0 * r - r0 * p, which cancels the leading entry.
        mpz_class a = p.front().second, b = r.front().second;
        mpz_class g = gcd(a, b);
        a /= g;
        b /= g;
        next.clear();
        std::size_t i = 1, j = 1;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                next.emplace_back(r[i].first, a * r[i].second);
                ++i;
            } else if (i == r.size() || p[j].first < r[i].first) {
                next.emplace_back(p[j].first, -b * p[j].second);
                ++j;
            } else {
                mpz_class v = a * r[i].second - b * p[j].second;
                if (sgn(v) != 0) next.emplace_back(r[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        make_primitive(next);
        std::swap(r, next);
    }
    return false;
}

std::vector<int> RowEchelon::pivot_columns() const {
    std::vector<int> out;
    for (int c = 0; c < cols_; ++c)
        if (pivot_[c]) out.push_back(c);
    return out;
}

std::vector<std::vector<Rat>> RowEchelon::kernel() const {
    std::vector<std::vector<Rat>> out;
    for (int f = 0; f < cols_; ++f) {
        if (pivot_[f]) continue;
        std::vector<Rat> x(cols_);
        x[f] = 1;
        for (int c = f - 1; c >= 0; --c) {
            if (!pivot_[c]) continue;
            const IntRow& p = *pivot_[c];
            Rat s = 0;
            for (std::size_t k = 1; k < p.size(); ++k)
                if (sgn(x[p[k].first]) != 0) s += Rat(p[k].second) * x[p[k].first];
            x[c] = -s / Rat(p.front().second);
        }
        out.push_back(std::move(x));
    }
    return out;
}

RowEchelon echelon(const SparseMatrix& m, const std::vector<bool>* keep) {
    if (keep && static_cast<int>(keep->size()) != m.cols) throw std::invalid_argument("column mask length mismatch");
    std::vector<SparseRow> rows;
    rows.reserve(m.rows);
    for (const auto& r : m.row) {
        SparseRow s;
        for (const auto& e : r)
            if (!keep || (*keep)[e.first]) s.push_back(e);
        if (!s.empty()) rows.push_back(std::move(s));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    RowEchelon e(m.cols);
    for (const auto& r : rows) {
        e.insert(r);
        if (e.rank() == m.cols) break;
    }
    return e;
}

int rank(const SparseMatrix& m, const std::vector<bool>* keep) { return echelon(m, keep).rank(); }

}  // namespace cr
