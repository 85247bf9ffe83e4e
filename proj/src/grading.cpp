#include "cr/grading.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cr {

WeightSystem::WeightSystem(TablePtr table, const std::map<std::string, int>& weights)
    : table_(std::move(table)), weights_(table_->size(), 0) {
    for (int i = 0; i < table_->size(); ++i) {
        auto it = weights.find(table_->name(i));
        if (it == weights.end()) throw std::invalid_argument("no weight for variable " + table_->name(i));
        if (it->second <= 0) throw std::invalid_argument("weights must be positive: " + table_->name(i));
        weights_[i] = it->second;
    }
    for (int i = 0; i < table_->size(); ++i)
        if (weights_[i] != weights_[table_->conj_index(i)])
            throw std::invalid_argument("conjugate variables must share a weight: " + table_->name(i));
    if (weights.size() != static_cast<std::size_t>(table_->size()))
        throw std::invalid_argument("weight given for a variable outside the table");
}

WeightSystem WeightSystem::preset(const std::string& name, TablePtr table) {
    std::map<std::string, int> w;
    auto set_pair = [&](const std::string& v, int x) {
        int i = table->index(v);
        w[table->name(i)] = x;
        w[table->name(table->conj_index(i))] = x;
    };
    if (name == "W1") {
        for (const auto& h : table->holo()) set_pair(h, h == "w" ? 2 : 1);
        for (const auto& r : table->real()) w[r] = r == "u" ? 2 : 1;
    } else if (name == "W2" || name == "W3") {
        bool two = name == "W2";
        set_pair("z1", 2);
        set_pair("z2", two ? 2 : 1);
        set_pair("zeta", 1);
        set_pair("w", two ? 4 : 3);
        for (const auto& r : table->real()) w[r] = r == "u" ? (two ? 4 : 3) : 1;
        if (static_cast<int>(w.size()) != table->size())
            throw std::invalid_argument(name + " needs exactly the variables z1, z2, zeta, w, u");
    } else {
        throw std::invalid_argument("unknown weight preset: " + name);
    }
    WeightSystem ws(table, w);
    ws.label_ = name;
    return ws;
}

std::map<std::string, int> WeightSystem::as_map() const {
    std::map<std::string, int> m;
    for (int i = 0; i < table_->size(); ++i) m[table_->name(i)] = weights_[i];
    return m;
}

int weight_of(const Monomial& m, const WeightSystem& ws) {
    int w = 0;
    for (int i = 0; i < ws.table()->size(); ++i) w += m.e[i] * ws.weight(i);
    return w;
}

Poly graded_component(const Poly& p, const WeightSystem& ws, int mu) {
    Poly r(p.table());
    for (const auto& [m, c] : p.terms())
        if (weight_of(m, ws) == mu) r.add_term(m, c);
    return r;
}

std::map<int, Poly> graded_components(const Poly& p, const WeightSystem& ws) {
    std::map<int, Poly> out;
    for (const auto& [m, c] : p.terms()) {
        int w = weight_of(m, ws);
        out.try_emplace(w, p.table()).first->second.add_term(m, c);
    }
    return out;
}

std::pair<int, int> weight_range(const Poly& p, const WeightSystem& ws) {
    if (p.is_zero()) throw std::invalid_argument("weight range of zero polynomial");
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& [m, c] : p.terms()) {
        int w = weight_of(m, ws);
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    return {lo, hi};
}

bool is_weighted_homogeneous(const Poly& p, const WeightSystem& ws, int mu) {
    for (const auto& [m, c] : p.terms())
        if (weight_of(m, ws) != mu) return false;
    return true;
}

namespace {

void enumerate(const std::vector<int>& idx, const std::vector<int>& wts, std::size_t pos, int rest, Monomial& cur,
               std::vector<Monomial>& out) {
    if (pos == idx.size()) {
        if (rest == 0) out.push_back(cur);
        return;
    }
    for (int k = rest / wts[pos]; k >= 0; --k) {
        cur.e[idx[pos]] = static_cast<std::uint8_t>(k);
        enumerate(idx, wts, pos + 1, rest - k * wts[pos], cur, out);
    }
    cur.e[idx[pos]] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const std::vector<std::string>& vars, const WeightSystem& ws, int mu) {
    std::vector<Monomial> out;
    if (mu < 0) return out;
    std::vector<int> idx, wts;
    for (const auto& v : vars) {
        idx.push_back(ws.table()->index(v));
        wts.push_back(ws.weight(idx.back()));
    }
    Monomial cur;
    enumerate(idx, wts, 0, mu, cur, out);
    return out;
}

const JetComponent& JetShape::component(const std::string& n) const {
    for (const auto& c : components)
        if (c.name == n) return c;
    throw std::invalid_argument("shape " + name + " has no component " + n);
}

int JetShape::equation_offset() const {
    for (const auto& c : components)
        if (c.target == wvar) return c.offset;
    throw std::invalid_argument("shape " + name + " has no component along " + wvar);
}

std::vector<JetBasisElement> jet_basis(const JetShape& shape, const WeightSystem& ws, int mu) {
    std::vector<JetBasisElement> out;
    for (std::size_t k = 0; k < shape.components.size(); ++k) {
        const auto& c = shape.components[k];
        int w = mu + c.offset;
        if (w < std::max(0, c.min_weight)) continue;
        for (const auto& m : monomial_basis(c.vars, ws, w)) out.push_back({mu, static_cast<int>(k), m});
    }
    return out;
}

}  // namespace cr
