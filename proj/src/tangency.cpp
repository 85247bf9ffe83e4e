#include "cr/tangency.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cr {

namespace {

JetComponent comp(std::string name, std::string target, std::vector<std::string> vars, int offset) {
    return JetComponent{std::move(name), std::move(target), std::move(vars), offset, 0};
}

const GaussRat kI = GaussRat::i();

}  // namespace

JetShape shape_quadric(int n) {
    std::vector<std::string> vars;
    for (int k = 1; k <= n; ++k) vars.push_back("z" + std::to_string(k));
    vars.push_back("w");
    JetShape s{"quadric" + std::to_string(n), {}};
    for (int k = 1; k <= n; ++k) s.components.push_back(comp("f" + std::to_string(k), "z" + std::to_string(k), vars, 1));
    s.components.push_back(comp("e", "w", vars, 2));
    return s;
}

JetShape shape_j6() {
    std::vector<std::string> v{"z", "zeta", "eta", "w"};
    return {"j6", {comp("f", "z", v, -1), comp("g", "zeta", v, -2), comp("h", "eta", v, -3), comp("e", "w", v, 0)}};
}

JetShape shape_two_nondeg_w1() {
    std::vector<std::string> v{"z1", "z2", "zeta", "w"};
    return {"pair-w1", {comp("f1", "z1", v, -1), comp("f2", "z2", v, -1), comp("g", "zeta", v, -2), comp("h", "w", v, 0)}};
}

JetShape shape_two_nondeg_w2() {
    std::vector<std::string> v{"z1", "z2", "zeta", "w"};
    return {"pair-w2", {comp("f1", "z1", v, -2), comp("f2", "z2", v, -2), comp("g", "zeta", v, -4), comp("h", "w", v, 0)}};
}

JetShape shape_q() {
    std::vector<std::string> v{"z1", "z2", "zeta", "w"};
    return {"q", {comp("f", "z1", v, 2), comp("g", "z2", v, 1), comp("h", "zeta", v, 1), comp("e", "w", v, 3)}};
}

FieldJet::FieldJet(JetShape shape_, TablePtr table) : shape(std::move(shape_)), table_(std::move(table)) {
    for (const auto& c : shape.components) comps.emplace(c.name, Poly(table_));
}

Poly& FieldJet::operator[](const std::string& name) {
    shape.component(name);
    return comps.at(name);
}

const Poly& FieldJet::at(const std::string& name) const {
    auto it = comps.find(name);
    if (it == comps.end()) throw std::invalid_argument("jet has no component " + name);
    return it->second;
}

std::map<int, FieldJet> FieldJet::by_jet_weight(const WeightSystem& ws) const {
    std::map<int, FieldJet> out;
    for (const auto& c : shape.components) {
        for (const auto& [w, part] : graded_components(at(c.name), ws)) {
            int mu = w - c.offset;
            auto it = out.find(mu);
            if (it == out.end()) it = out.emplace(mu, FieldJet(shape, table_)).first;
            it->second.comps.at(c.name) = part;
        }
    }
    return out;
}

void validate_jet(const FieldJet& phi) {
    const VarTable& t = *phi.table();
    for (const auto& c : phi.shape.components) {
        const Poly& p = phi.at(c.name);
        if (!(*p.table() == t)) throw std::invalid_argument("component " + c.name + " uses a different table");
        std::vector<bool> allowed(t.size(), false);
        for (const auto& v : c.vars) {
            int i = t.index(v);
            if (t.kind(i) != VarKind::holo) throw std::invalid_argument("component variable " + v + " is not holomorphic");
            allowed[i] = true;
        }
        for (int i = 0; i < t.size(); ++i)
            if (!allowed[i] && contains_var(p, i))
                throw std::invalid_argument("component " + c.name + " depends on " + t.name(i));
    }
}

Poly tangency_residual(const ModelSurface& s, const FieldJet& phi, std::optional<int> max_weight) {
    validate_jet(phi);
    if (!(*phi.table() == *s.table())) throw std::invalid_argument("jet and surface use different tables");
    auto tr = s.ws.truncation(max_weight);
    Poly W = Poly::var(s.table(), s.uvar) + Poly::constant(s.table(), kI) * s.F;
    Poly out(s.table());
    for (const auto& c : phi.shape.components) {
        Poly sub = substitute(phi.at(c.name), s.wvar, W, tr);
        if (c.target == s.wvar)
            out += im_part(sub);
        else
            out -= re2(mul(sub, diff(s.F, c.target), tr));
    }
    return truncate(out, tr);
}

LinearizedOperator::LinearizedOperator(const ModelSurface& s, const JetShape& shape, const WeightSystem& ws)
    : s_(s), shape_(shape), ws_(ws), eoff_(shape.equation_offset()), wvar_(s.table()->index(shape.wvar)),
      W_(Poly::var(s.table(), s.uvar) + Poly::constant(s.table(), kI) * s.F) {
    if (!(*ws.table() == *s.table())) throw std::invalid_argument("weight system and surface use different tables");
    for (const auto& c : shape_.components) {
        s.table()->index(c.target);
        if (c.target == shape_.wvar)
            dF_.emplace_back(std::nullopt);
        else
            dF_.emplace_back(diff(s.F, c.target));
    }
}

void LinearizedOperator::check_depth(int depth) const {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    // A truncated series only determines the operator up to a limited depth in its own grading.
    // Under any other grading the stored polynomial is taken as the model itself.
    if (s_.exact || s_.F.is_zero() || ws_.weights() != s_.ws.weights()) return;
    int lowest = weight_range(s_.F, s_.ws).first;
    if (depth > s_.trunc - lowest + 1)
        throw std::invalid_argument("depth " + std::to_string(depth) + " exceeds what the truncated surface determines");
}

const Poly& LinearizedOperator::w_power(int k, int max_out) const {
    auto key = std::make_pair(k, max_out);
    auto it = wpow_.find(key);
    if (it != wpow_.end()) return it->second;
    auto tr = ws_.truncation(max_out);
    Poly p = k == 0 ? truncate(Poly::constant(s_.table(), 1), tr) : mul(w_power(k - 1, max_out), W_, tr);
    return wpow_.emplace(key, std::move(p)).first->second;
}

Poly LinearizedOperator::substitute_w(const Poly& p, int max_out) const {
    auto tr = ws_.truncation(max_out);
    Poly r(s_.table());
    int top = max_degree(p, wvar_);
    for (int k = 0; k <= top; ++k) {
        Poly ck = coefficient_of(p, wvar_, k);
        if (!ck.is_zero()) r += mul(ck, w_power(k, max_out), tr);
    }
    return r;
}

Poly LinearizedOperator::column(int comp, const Monomial& mono, const GaussRat& c, int lo, int hi) const {
    Poly out(s_.table());
    if (hi < lo) return out;
    if (comp < 0 || comp >= static_cast<int>(shape_.components.size())) throw std::invalid_argument("bad component");
    auto tr = ws_.truncation(hi);
    Poly sub = substitute_w(Poly::term(s_.table(), mono, c), hi);
    Poly P = dF_[comp] ? mul(sub, *dF_[comp], tr) * GaussRat(2) : sub * kI;
    Poly L = re2(P);
    for (const auto& [m, v] : L.terms())
        if (weight_of(m, ws_) >= lo) out.add_term(m, v);
    return out;
}

Poly LinearizedOperator::apply(const FieldJet& phi, int depth, std::optional<int> max_out) const {
    check_depth(depth);
    validate_jet(phi);
    Poly out(s_.table());
    for (const auto& [mu, part] : phi.by_jet_weight(ws_)) {
        int lo = mu + eoff_;
        int hi = lo + depth - 1;
        if (max_out) hi = std::min(hi, *max_out);
        for (std::size_t k = 0; k < shape_.components.size(); ++k)
            for (const auto& [m, c] : part.at(shape_.components[k].name).terms())
                out += column(static_cast<int>(k), m, c, lo, hi);
    }
    return out;
}

Poly LinearizedOperator::apply_full(const FieldJet& phi, int max_out) const {
    validate_jet(phi);
    Poly out(s_.table());
    for (std::size_t k = 0; k < shape_.components.size(); ++k)
        for (const auto& [m, c] : phi.at(shape_.components[k].name).terms())
            out += column(static_cast<int>(k), m, c, std::numeric_limits<int>::min(), max_out);
    return out;
}

Poly delta_operator(const Poly& Fj, const Poly& psi, const std::string& uvar) {
    check_same_table(Fj, psi);
    int u = psi.table()->index(uvar);
    for (const auto& [m, c] : psi.terms())
        for (int i = 0; i < psi.table()->size(); ++i)
            if (i != u && m.e[i]) throw std::invalid_argument("delta_operator: psi must depend on " + uvar + " only");
    return Poly::constant(psi.table(), kI) * mul(Fj, diff(psi, u));
}

namespace {

// Evaluates holomorphic components at w = u + i*F2 and provides the w-derivatives used by the
// Delta operators: d/du [X(u + i F2)] = X_w(u + i F2).
struct AtQuadric {
    Poly W;
    Poly at(const Poly& X) const { return substitute(X, "w", W); }
    Poly dw(const Poly& X, int k) const {
        Poly d = X;
        for (int j = 0; j < k; ++j) d = diff(d, "w");
        return at(d);
    }
};

}  // namespace

Poly explicit_L_j6(const FieldJet& phi, const J6Params& p) {
    const TablePtr& t = phi.table();
    auto T = [&](const GaussRat& c, const std::vector<std::pair<std::string, int>>& e) { return make_term(t, c, e); };
    const Poly& f = phi.at("f");
    const Poly& g = phi.at("g");
    const Poly& h = phi.at("h");
    const Poly& e = phi.at("e");
    Poly iC = Poly::constant(t, kI);
    AtQuadric A{Poly::var(t, "u") + iC * T(1, {{"z", 1}, {"zbar", 1}})};
    Poly F3 = re2(T(1, {{"z", 2}, {"zetabar", 1}}));
    Poly F4 = re2(T(1, {{"z", 3}, {"etabar", 1}})) + T(4, {{"z", 1}, {"zbar", 1}, {"zeta", 1}, {"zetabar", 1}});
    const auto& r = p.r;
    const auto& s = p.s;

    Poly X1 = iC * e + T(2, {{"zbar", 1}}) * f + T(2, {{"zbar", 2}}) * g + T(2, {{"zbar", 3}}) * h;
    Poly x2 = T(4, {{"z", 1}, {"zetabar", 1}}) * f + T(8, {{"z", 1}, {"zbar", 1}, {"zetabar", 1}}) * g +
              (T(2 * r[1], {{"zbar", 4}}) + T(4 * r[2].conj(), {{"zbar", 1}, {"zeta", 2}, {"eta", 1}}) +
               T(8 * r[3].conj(), {{"zbar", 1}, {"eta", 3}}) + T(12, {{"z", 1}, {"zbar", 2}, {"zetabar", 1}})) *
                  h;
    Poly x3 = (T(8, {{"zbar", 1}, {"zeta", 1}, {"zetabar", 1}}) + T(6, {{"z", 2}, {"etabar", 1}})) * f +
              (T(2 * r[0], {{"zbar", 4}}) + T(4 * r[2].conj(), {{"zbar", 1}, {"zeta", 1}, {"eta", 2}}) +
               T(12, {{"z", 2}, {"zbar", 1}, {"etabar", 1}}) + T(8, {{"z", 2}, {"zetabar", 2}}) +
               T(16, {{"zbar", 2}, {"zeta", 1}, {"zetabar", 1}})) *
                  g +
              (T(16 * r[1], {{"z", 1}, {"zbar", 3}, {"zetabar", 1}}) +
               T(8 * r[2].conj(), {{"z", 1}, {"zeta", 2}, {"zetabar", 1}, {"eta", 1}}) +
               T(16 * r[3].conj(), {{"z", 1}, {"zetabar", 1}, {"eta", 3}}) + T(2 * s[3], {{"zbar", 5}}) +
               T(2 * s[5], {{"zbar", 4}, {"zeta", 1}}) + T(4 * s[6], {{"zbar", 4}, {"eta", 1}}) +
               T(2 * s[2], {{"z", 1}, {"zbar", 4}}) + T(10 * s[7], {{"zbar", 1}, {"eta", 4}}) +
               T(24, {{"z", 2}, {"zbar", 1}, {"zetabar", 2}}) + T(24, {{"zbar", 3}, {"zeta", 1}, {"zetabar", 1}}) +
               T(18, {{"z", 2}, {"zbar", 2}, {"etabar", 1}})) *
                  h;

    Poly L1 = re2(A.at(X1));
    Poly L2 = re2(iC * F3 * A.dw(X1, 1) + A.at(x2));
    Poly L3 = re2(iC * F3 * A.dw(x2, 1) + iC * F4 * A.dw(X1, 1) +
                  Poly::constant(t, GaussRat(Rat(-1, 2))) * F3 * F3 * A.dw(X1, 2) + A.at(x3));
    return L1 + L2 + L3;
}

namespace {

Poly explicit_pair_operator(const FieldJet& phi, const TwoNondegParams& p, bool with_pq) {
    const TablePtr& t = phi.table();
    PairForms forms = pair_forms(p);
    const char* z[2] = {"z1", "z2"};
    Poly iC = Poly::constant(t, kI);
    Poly hform(t), Kzz(t);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            hform += make_term(t, forms.H[a][b], {{z[a], 1}, {std::string(z[b]) + "bar", 1}});
            Kzz += make_term(t, forms.K[a][b], {{z[a], 1}, {z[b], 1}});
        }
    AtQuadric A{Poly::var(t, "u") + iC * hform};
    Poly zeta = Poly::var(t, "zeta");
    Poly zetabar = Poly::var(t, "zetabar");
    Poly FK = re2(Kzz * zetabar);
    Poly R = make_term(t, p.R[0], {{"z1", 2}}) + make_term(t, p.R[1], {{"z1", 1}, {"z2", 1}}) +
             make_term(t, p.R[2], {{"z2", 2}});
    Poly S = forced_s_form(p, t);

    Poly f[2] = {phi.at("f1"), phi.at("f2")};
    const Poly& g = phi.at("g");
    const Poly& h = phi.at("h");

    Poly X1 = iC * h + Poly::constant(t, 2) * conj(Kzz) * g;
    Poly Kfz(t);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            X1 += make_term(t, 2 * forms.H[a][b], {{std::string(z[b]) + "bar", 1}}) * f[a];
            Kfz += make_term(t, forms.K[a][b], {{z[b], 1}}) * f[a];
        }
    Poly gcoef = Poly::constant(t, 2) * conj(R) * zeta + S * zetabar;
    if (with_pq) {
        if (p.P) gcoef += conj(*p.P);
        if (p.Q) gcoef += conj(*p.Q);
    }
    Poly x2 = Poly::constant(t, 4) * Kfz * zetabar + Poly::constant(t, 2) * gcoef * g;
    return re2(A.at(X1)) + re2(iC * FK * A.dw(X1, 1) + A.at(x2));
}

}  // namespace

Poly explicit_L_2nd_w1(const FieldJet& phi, const TwoNondegParams& p) { return explicit_pair_operator(phi, p, true); }

Poly explicit_calL(const FieldJet& phi, const TwoNondegParams& p) { return explicit_pair_operator(phi, p, false); }

}  // namespace cr
