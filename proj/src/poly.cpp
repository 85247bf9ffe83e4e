#include "cr/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cr {

TablePtr VarTable::make(std::vector<std::string> holo, std::vector<std::string> real,
                        std::vector<std::string> anti) {
    if (anti.empty())
        for (const auto& h : holo) anti.push_back(h + "bar");
    if (anti.size() != holo.size()) throw std::invalid_argument("holo/anti length mismatch");
    auto t = std::make_shared<VarTable>();
    t->nholo_ = static_cast<int>(holo.size());
    for (auto* list : {&holo, &anti, &real})
        for (auto& n : *list) t->names_.push_back(n);
    if (t->names_.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
    std::set<std::string> seen(t->names_.begin(), t->names_.end());
    if (seen.size() != t->names_.size()) throw std::invalid_argument("duplicate variable name");
    int n = t->size();
    t->conj_.resize(n);
    for (int i = 0; i < n; ++i) {
        if (i < t->nholo_)
            t->conj_[i] = i + t->nholo_;
        else if (i < 2 * t->nholo_)
            t->conj_[i] = i - t->nholo_;
        else
            t->conj_[i] = i;
    }
    return t;
}

VarKind VarTable::kind(int i) const {
    if (i < nholo_) return VarKind::holo;
    if (i < 2 * nholo_) return VarKind::anti;
    return VarKind::real;
}

std::optional<int> VarTable::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

int VarTable::index(const std::string& name) const {
    auto i = find(name);
    if (!i) throw std::invalid_argument("unknown variable: " + name);
    return *i;
}

std::vector<std::string> VarTable::holo() const { return {names_.begin(), names_.begin() + nholo_}; }
std::vector<std::string> VarTable::anti() const {
    return {names_.begin() + nholo_, names_.begin() + 2 * nholo_};
}
std::vector<std::string> VarTable::real() const { return {names_.begin() + 2 * nholo_, names_.end()}; }

int Monomial::degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        int s = a.e[i] + b.e[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

Monomial mono_conj(const Monomial& m, const VarTable& t) {
    Monomial r;
    for (int i = 0; i < t.size(); ++i) r.e[t.conj_index(i)] = m.e[i];
    return r;
}

int TruncationSpec::weight(const Monomial& m) const {
    int w = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) w += weights[i] * m.e[i];
    return w;
}

Poly::Poly(TablePtr table) : table_(std::move(table)) {
    if (!table_) throw std::invalid_argument("null variable table");
}

Poly Poly::constant(TablePtr table, const GaussRat& c) {
    Poly p(std::move(table));
    p.add_term(Monomial{}, c);
    return p;
}

Poly Poly::var(TablePtr table, const std::string& name) {
    Monomial m;
    m.e[table->index(name)] = 1;
    return term(std::move(table), m, GaussRat(1));
}

Poly Poly::term(TablePtr table, const Monomial& m, const GaussRat& c) {
    Poly p(std::move(table));
    p.add_term(m, c);
    return p;
}

GaussRat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRat() : it->second;
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void check_same_table(const Poly& a, const Poly& b) {
    if (a.table() != b.table() && !(*a.table() == *b.table()))
        throw std::invalid_argument("variable-table mismatch");
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_table(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_table(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

bool Poly::operator==(const Poly& o) const {
    check_same_table(*this, o);
    return terms_ == o.terms_;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < table_->size(); ++i)
            if (m.e[i]) os << '*' << table_->name(i) << '^' << int(m.e[i]);
    }
    return os.str();
}

Poly mul(const Poly& a, const Poly& b, const TruncationSpec& trunc) {
    check_same_table(a, b);
    Poly r(a.table());
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<std::pair<const Monomial*, const GaussRat*>> bt;
    std::vector<int> bw;
    for (const auto& [m, c] : b.terms()) {
        bt.emplace_back(&m, &c);
        bw.push_back(trunc.weight(m));
    }
    for (const auto& [ma, ca] : a.terms()) {
        int wa = trunc.weight(ma);
        for (std::size_t k = 0; k < bt.size(); ++k) {
            if (trunc.max_weight && wa + bw[k] > *trunc.max_weight) continue;
            r.add_term(mono_mul(ma, *bt[k].first), ca * *bt[k].second);
        }
    }
    return r;
}

Poly power(const Poly& p, int k, const TruncationSpec& trunc) {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly r = truncate(Poly::constant(p.table(), GaussRat(1)), trunc);
    for (int i = 0; i < k; ++i) r = mul(r, p, trunc);
    return r;
}

Poly conj(const Poly& p) {
    Poly r(p.table());
    for (const auto& [m, c] : p.terms()) r.add_term(mono_conj(m, *p.table()), c.conj());
    return r;
}

Poly re2(const Poly& p) { return p + conj(p); }

Poly im_part(const Poly& p) {
    // (p - conj p) / (2i) = -i/2 (p - conj p)
    return (p - conj(p)) * GaussRat(0, Rat(-1, 2));
}

Poly diff(const Poly& p, int v) {
    if (v < 0 || v >= p.table()->size()) throw std::invalid_argument("unknown variable index");
    Poly r(p.table());
    for (const auto& [m, c] : p.terms()) {
        if (m.e[v] == 0) continue;
        Monomial d = m;
        d.e[v] -= 1;
        r.add_term(d, c * GaussRat(m.e[v]));
    }
    return r;
}

Poly diff(const Poly& p, const std::string& var) { return diff(p, p.table()->index(var)); }

Poly truncate(const Poly& p, const TruncationSpec& trunc) {
    if (!trunc.max_weight) return p;
    Poly r(p.table());
    for (const auto& [m, c] : p.terms())
        if (trunc.keeps(m)) r.add_term(m, c);
    return r;
}

Poly substitute_all(const Poly& p, const std::map<int, Poly>& images, const TruncationSpec& trunc) {
    for (const auto& [v, q] : images) {
        if (v < 0 || v >= p.table()->size()) throw std::invalid_argument("unknown variable index");
        check_same_table(p, q);
    }
    std::map<std::pair<int, int>, Poly> powers;
    auto pw = [&](int v, int k) -> const Poly& {
        auto key = std::make_pair(v, k);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, power(images.at(v), k, trunc)).first->second;
    };
    Poly r(p.table());
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        for (const auto& [v, q] : images) rest.e[v] = 0;
        Poly term = truncate(Poly::term(p.table(), rest, c), trunc);
        for (const auto& [v, q] : images)
            if (m.e[v] && !term.is_zero()) term = mul(term, pw(v, m.e[v]), trunc);
        r += term;
    }
    return r;
}

Poly retable(const Poly& p, const TablePtr& table) {
    std::vector<std::optional<int>> map(p.table()->size());
    for (int i = 0; i < p.table()->size(); ++i) map[i] = table->find(p.table()->name(i));
    Poly r(table);
    for (const auto& [m, c] : p.terms()) {
        Monomial n;
        for (int i = 0; i < p.table()->size(); ++i) {
            if (!m.e[i]) continue;
            if (!map[i]) throw std::invalid_argument("variable " + p.table()->name(i) + " missing from target table");
            n.e[*map[i]] = m.e[i];
        }
        r.add_term(n, c);
    }
    return r;
}

Poly series_inverse(const Poly& den, const TruncationSpec& trunc) {
    if (!trunc.max_weight) throw std::invalid_argument("series inverse needs a truncation weight");
    GaussRat c0 = den.coeff(Monomial{});
    if (c0.is_zero()) throw std::invalid_argument("series inverse: zero constant term");
    Poly rest = den;
    rest.add_term(Monomial{}, -c0);
    for (const auto& [m, c] : rest.terms())
        if (trunc.weight(m) <= 0) throw std::invalid_argument("series inverse: non-constant term of weight <= 0");
    // 1/(c0 + r) = c0^-1 * sum_k (-r/c0)^k
    GaussRat inv = c0.inverse();
    Poly x = rest * (-inv);
    Poly term = truncate(Poly::constant(den.table(), GaussRat(1)), trunc);
    Poly sum = term;
    while (!term.is_zero()) {
        term = mul(term, x, trunc);
        sum += term;
    }
    return sum * inv;
}

Poly coefficient_of(const Poly& p, int v, int k) {
    Poly r(p.table());
    for (const auto& [m, c] : p.terms()) {
        if (m.e[v] != k) continue;
        Monomial d = m;
        d.e[v] = 0;
        r.add_term(d, c);
    }
    return r;
}

int max_degree(const Poly& p, int v) {
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, int(m.e[v]));
    return d;
}

bool contains_var(const Poly& p, int v) { return max_degree(p, v) > 0; }

bool is_conj_fixed(const Poly& p) { return conj(p) == p; }

Poly substitute(const Poly& p, const std::string& var, const Poly& q, const TruncationSpec& trunc) {
    check_same_table(p, q);
    int v = p.table()->index(var);
    if (contains_var(q, v)) throw std::invalid_argument("substitution is self-referential in " + var);
    int top = max_degree(p, v);
    std::vector<Poly> pw;
    pw.push_back(truncate(Poly::constant(p.table(), GaussRat(1)), trunc));
    for (int k = 1; k <= top; ++k) pw.push_back(mul(pw.back(), q, trunc));
    Poly r(p.table());
    for (int k = 0; k <= top; ++k) {
        Poly ck = coefficient_of(p, v, k);
        if (ck.is_zero()) continue;
        r += mul(ck, pw[k], trunc);
    }
    return r;
}

Poly make_term(const TablePtr& table, const GaussRat& c, const std::vector<std::pair<std::string, int>>& exps) {
    Monomial m;
    for (const auto& [v, k] : exps) {
        if (k < 0 || k > 255) throw std::invalid_argument("bad exponent");
        m.e[table->index(v)] += static_cast<std::uint8_t>(k);
    }
    return Poly::term(table, m, c);
}

GaussRat eval(const Poly& p, const Point& point, bool real_locus) {
    const VarTable& t = *p.table();
    std::vector<std::optional<GaussRat>> val(t.size());
    for (const auto& [name, v] : point) val[t.index(name)] = v;
    if (real_locus) {
        for (int i = 0; i < t.size(); ++i) {
            if (!val[i]) continue;
            int j = t.conj_index(i);
            if (j == i) {
                if (!val[i]->is_real()) throw std::invalid_argument("real variable with complex value: " + t.name(i));
            } else if (val[j] && *val[j] != val[i]->conj()) {
                throw std::invalid_argument("conjugation inconsistency at " + t.name(i));
            }
        }
    }
    GaussRat sum;
    for (const auto& [m, c] : p.terms()) {
        GaussRat term = c;
        for (int i = 0; i < t.size(); ++i) {
            if (!m.e[i]) continue;
            if (!val[i]) throw std::invalid_argument("missing assignment for " + t.name(i));
            for (int k = 0; k < m.e[i]; ++k) term *= *val[i];
        }
        sum += term;
    }
    return sum;
}

}  // namespace cr
