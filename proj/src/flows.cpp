#include "cr/flows.hpp"

#include <stdexcept>

namespace cr {

namespace {

const GaussRat kI = GaussRat::i();

using PowerCache = std::map<std::pair<const Poly*, int>, Poly>;

const Poly& cached_power(PowerCache& cache, const Poly& p, int k) {
    auto key = std::make_pair(&p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, power(p, k)).first->second;
}

// sum_m c_m prod_i (N_i / D_i)^{m_i}, multiplied by prod_i D_i^{A_i}.
Poly clear_denominators(const Poly& p, const std::vector<const Poly*>& num, const std::vector<const Poly*>& den,
                        const std::vector<int>& A, const TablePtr& out_table, PowerCache& cache) {
    Poly r(out_table);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(out_table, c);
        for (std::size_t i = 0; i < num.size(); ++i) {
            if (!num[i]) {
                if (m.e[i]) throw std::logic_error("unmapped variable in clear_denominators");
                continue;
            }
            if (m.e[i]) term = term * cached_power(cache, *num[i], m.e[i]);
            if (A[i] > m.e[i]) term = term * cached_power(cache, *den[i], A[i] - m.e[i]);
        }
        r += term;
    }
    return r;
}

bool holomorphic_only(const Poly& p) {
    const VarTable& t = *p.table();
    for (int i = 0; i < t.size(); ++i)
        if (t.kind(i) != VarKind::holo && contains_var(p, i)) return false;
    return true;
}

}  // namespace

RationalMap::RationalMap(TablePtr t) : table(std::move(t)) {}

void RationalMap::set(const std::string& target, Poly num) { set(target, std::move(num), Poly::constant(table, 1)); }

void RationalMap::set(const std::string& target, Poly num, Poly den) {
    if (table->kind(table->index(target)) != VarKind::holo) throw std::invalid_argument(target + " is not holomorphic");
    check_same_table(num, den);
    comps.insert_or_assign(target, std::make_pair(std::move(num), std::move(den)));
}

std::pair<Poly, Poly> RationalMap::component(const std::string& target) const {
    auto it = comps.find(target);
    if (it != comps.end()) return it->second;
    return {Poly::var(table, target), Poly::constant(table, 1)};
}

void validate_map(const RationalMap& m) {
    for (const auto& [v, nd] : m.comps) {
        if (!holomorphic_only(nd.first) || !holomorphic_only(nd.second))
            throw std::invalid_argument("map component " + v + " is not holomorphic");
        if (nd.second.coeff(Monomial{}).is_zero())
            throw std::invalid_argument("denominator of " + v + " vanishes at the origin");
    }
}

Poly automorphism_defect(const ModelSurface& s, const RationalMap& m) {
    validate_map(m);
    if (!(*m.table == *s.table())) throw std::invalid_argument("map and surface use different tables");
    const TablePtr& t = s.table();
    const VarTable& T = *t;
    int n = T.size();
    Poly G = im_part(Poly::var(t, s.wvar)) - s.F;

    std::vector<Poly> nums, dens;
    nums.reserve(n);
    dens.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (T.kind(i) == VarKind::real) {
            nums.push_back(Poly::var(t, T.name(i)));
            dens.push_back(Poly::constant(t, 1));
        } else {
            int h = T.kind(i) == VarKind::holo ? i : T.conj_index(i);
            auto [N, D] = m.component(T.name(h));
            if (h == i) {
                nums.push_back(N);
                dens.push_back(D);
            } else {
                nums.push_back(conj(N));
                dens.push_back(conj(D));
            }
        }
    }
    std::vector<const Poly*> np, dp;
    std::vector<int> A(n);
    for (int i = 0; i < n; ++i) {
        np.push_back(&nums[i]);
        dp.push_back(&dens[i]);
        A[i] = max_degree(G, i);
    }
    PowerCache cache;
    Poly cleared = clear_denominators(G, np, dp, A, t, cache);
    int w = T.index(s.wvar);
    Poly iF = Poly::constant(t, kI) * s.F;
    Poly u = Poly::var(t, s.uvar);
    return substitute_all(cleared, {{w, u + iF}, {T.conj_index(w), u - iF}});
}

bool verify_exact_automorphism(const ModelSurface& s, const RationalMap& m) {
    return automorphism_defect(s, m).is_zero();
}

RationalMap compose(const RationalMap& first, const RationalMap& second) {
    validate_map(first);
    validate_map(second);
    if (!(*first.table == *second.table)) throw std::invalid_argument("maps use different tables");
    const TablePtr& t = first.table;
    int n = t->size();
    std::vector<Poly> nums, dens;
    for (int i = 0; i < n; ++i) {
        if (t->kind(i) == VarKind::holo) {
            auto [N, D] = first.component(t->name(i));
            nums.push_back(N);
            dens.push_back(D);
        } else {
            nums.push_back(Poly(t));
            dens.push_back(Poly(t));
        }
    }
    std::vector<const Poly*> np(n, nullptr), dp(n, nullptr);
    for (int i = 0; i < n; ++i)
        if (t->kind(i) == VarKind::holo) {
            np[i] = &nums[i];
            dp[i] = &dens[i];
        }
    RationalMap out(t);
    PowerCache cache;
    for (int v = 0; v < t->holo_count(); ++v) {
        auto [N2, D2] = second.component(t->name(v));
        std::vector<int> A(n);
        for (int i = 0; i < n; ++i) A[i] = std::max(max_degree(N2, i), max_degree(D2, i));
        Poly N = clear_denominators(N2, np, dp, A, t, cache);
        Poly D = clear_denominators(D2, np, dp, A, t, cache);
        out.set(t->name(v), N, D);
    }
    validate_map(out);
    return out;
}

RationalMap q_translation(const ModelSurface& s, const GaussRat& a, const GaussRat& b, const GaussRat& c,
                          const Rat& d_re) {
    const TablePtr& t = s.table();
    for (const char* v : {"z1", "z2", "zeta", "w"}) t->index(v);
    Point p{{"z1", a}, {"z1bar", a.conj()}, {"z2", b}, {"z2bar", b.conj()}, {"zeta", c}, {"zetabar", c.conj()}};
    GaussRat d = GaussRat(d_re, eval(s.F, p, true).re());
    auto T = [&](const GaussRat& k, const std::vector<std::pair<std::string, int>>& e) { return make_term(t, k, e); };
    RationalMap m(t);
    m.set("z1", T(a, {}) + T(1, {{"z1", 1}}));
    m.set("z2", T(b, {}) + T(-2 * a.conj(), {{"zeta", 1}}) + T(1, {{"z2", 1}}));
    m.set("zeta", T(c, {}) + T(1, {{"zeta", 1}}));
    Poly lin = T(b.conj() + 2 * a * c.conj(), {{"z1", 1}}) + T(a.conj(), {{"z2", 1}}) +
               T(-a.conj() * a.conj(), {{"zeta", 1}}) + T(c.conj(), {{"z1", 2}});
    m.set("w", T(d, {}) + lin * (2 * kI) + T(1, {{"w", 1}}));
    return m;
}

RationalMap shear_z1(const ModelSurface& s, const Rat& tt) {
    const TablePtr& t = s.table();
    RationalMap m(t);
    m.set("z1", Poly::var(t, "z1") + make_term(t, GaussRat(0, tt), {{"zeta", 1}}));
    return m;
}

RationalMap shear_z2(const ModelSurface& s, const Rat& tt) {
    const TablePtr& t = s.table();
    RationalMap m(t);
    m.set("z2", Poly::var(t, "z2") + make_term(t, GaussRat(0, tt), {{"zeta", 2}}));
    return m;
}

namespace {

RationalMap g1_map(const ModelSurface& s, const GaussRat& N, const Rat& tt, bool with_w) {
    const TablePtr& t = s.table();
    auto T = [&](const GaussRat& k, const std::vector<std::pair<std::string, int>>& e) { return make_term(t, k, e); };
    GaussRat T1(tt);
    Poly D = T(1, {}) - T(kI * N.conj() * T1, {{"zeta", 1}});
    Poly D2 = D * D;
    RationalMap m(t);
    Poly z1 = T(1, {{"z1", 1}});
    Poly z2 = T(1, {{"z2", 1}}) - T(kI * N * T1, {{"z1", 1}});
    if (with_w) {
        z1 += T(N * T1, {{"w", 1}});
        z2 -= T(kI * N * N * T1 * T1 / GaussRat(2), {{"w", 1}});
    }
    m.set("z1", z1, D2);
    m.set("z2", z2, D2);
    m.set("zeta", T(1, {{"zeta", 1}}), D);
    m.set("w", T(1, {{"w", 1}}), D2);
    return m;
}

FieldJet q_jet(const ModelSurface& s) { return FieldJet(shape_q(), s.table()); }

}  // namespace

RationalMap g1_flow(const ModelSurface& s, const GaussRat& N, const Rat& t) { return g1_map(s, N, t, true); }

RationalMap g1_flow_without_w_terms(const ModelSurface& s, const GaussRat& N, const Rat& t) {
    return g1_map(s, N, t, false);
}

FieldJet q_field_m3(const ModelSurface& s, const Rat& d) {
    FieldJet X = q_jet(s);
    X["e"] = Poly::constant(s.table(), d);
    return X;
}

FieldJet q_field_m2(const ModelSurface& s, const GaussRat& a) {
    FieldJet X = q_jet(s);
    X["f"] = Poly::constant(s.table(), a);
    X["e"] = make_term(s.table(), 2 * kI * a.conj(), {{"zeta", 1}});
    return X;
}

FieldJet q_field_m1(const ModelSurface& s, const GaussRat& b, const GaussRat& c, const Rat& k) {
    const TablePtr& t = s.table();
    FieldJet X = q_jet(s);
    X["f"] = make_term(t, -2 * c.conj(), {{"z2", 1}}) + make_term(t, GaussRat(0, k), {{"zeta", 1}});
    X["g"] = Poly::constant(t, b);
    X["h"] = Poly::constant(t, c);
    X["e"] = make_term(t, 2 * kI * c.conj(), {{"z1", 1}}) + make_term(t, 2 * kI * b.conj(), {{"zeta", 2}});
    return X;
}

FieldJet q_field_0(const ModelSurface& s, const GaussRat& M, const GaussRat& m, const Rat& l) {
    const TablePtr& t = s.table();
    FieldJet X = q_jet(s);
    GaussRat L(l);
    X["f"] = make_term(t, M, {{"z1", 1}}) + make_term(t, m, {{"zeta", 2}});
    X["g"] = make_term(t, 2 * M - 3 * L, {{"z2", 1}}) + make_term(t, -m.conj(), {{"zeta", 1}});
    X["h"] = make_term(t, 3 * L - M.conj(), {{"zeta", 1}});
    X["e"] = make_term(t, 3 * L, {{"w", 1}});
    return X;
}

FieldJet q_field_1(const ModelSurface& s, const GaussRat& N, const Rat& n) {
    const TablePtr& t = s.table();
    FieldJet X = q_jet(s);
    GaussRat iNb = kI * N.conj();
    X["f"] = make_term(t, 2 * iNb, {{"z1", 1}, {"zeta", 1}}) + make_term(t, N, {{"w", 1}});
    X["g"] = make_term(t, 2 * iNb, {{"z2", 1}, {"zeta", 1}}) + make_term(t, -kI * N, {{"z1", 1}}) +
             make_term(t, GaussRat(0, n), {{"zeta", 2}});
    X["h"] = make_term(t, iNb, {{"zeta", 2}});
    X["e"] = make_term(t, 2 * iNb, {{"zeta", 1}, {"w", 1}});
    return X;
}

TablePtr flow_table(const ModelSurface& s) {
    std::vector<std::string> real = s.table()->real();
    real.push_back("t");
    return VarTable::make(s.table()->holo(), real, s.table()->anti());
}

Poly exp_series(const TablePtr& t, const GaussRat& c, int order) {
    Poly r(t);
    GaussRat coef(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) coef = coef * c / GaussRat(k);
        r += make_term(t, coef, {{"t", k}});
    }
    return r;
}

namespace {

TruncationSpec time_truncation(const TablePtr& t, int order) {
    TruncationSpec tr;
    tr.weights.assign(t->size(), 0);
    tr.weights[t->index("t")] = 1;
    tr.max_weight = order;
    return tr;
}

}  // namespace

FormalFlow g0_flow_series(const ModelSurface& s, const Rat& l, const Rat& mu, const GaussRat& m, int order) {
    TablePtr t = flow_table(s);
    auto tr = time_truncation(t, order);
    auto T = [&](const GaussRat& k, const std::vector<std::pair<std::string, int>>& e) { return make_term(t, k, e); };
    // (e^{mu t} - 1) / mu
    Poly E(t);
    GaussRat coef(1);
    for (int k = 1; k <= order; ++k) {
        coef = coef / GaussRat(k);
        GaussRat c = coef;
        for (int j = 1; j < k; ++j) c *= GaussRat(mu);
        E += T(c, {{"t", k}});
    }
    Rat third = mu / 3;
    FormalFlow f{t, order, {}};
    f.comps.insert_or_assign("z1", mul(T(1, {{"z1", 1}}) + mul(E, T(m, {{"zeta", 2}}), tr), exp_series(t, GaussRat(2 * l - third), order), tr));
    f.comps.insert_or_assign("z2", mul(T(1, {{"z2", 1}}) - mul(E, T(m.conj(), {{"zeta", 1}}), tr),
                        exp_series(t, GaussRat(l - 2 * third), order), tr));
    f.comps.insert_or_assign("zeta", mul(T(1, {{"zeta", 1}}), exp_series(t, GaussRat(l + third), order), tr));
    f.comps.insert_or_assign("w", mul(T(1, {{"w", 1}}), exp_series(t, GaussRat(3 * l), order), tr));
    return f;
}

FormalFlow lie_series_flow(const ModelSurface& s, const FieldJet& field, int order) {
    TablePtr t = flow_table(s);
    auto tr = time_truncation(t, order);
    std::map<int, Poly> X;
    for (const auto& c : field.shape.components) X.emplace(t->index(c.target), retable(field.at(c.name), t));
    auto apply_field = [&](const Poly& p) {
        Poly r(t);
        for (const auto& [v, Xv] : X) r += diff(p, v) * Xv;
        return r;
    };
    FormalFlow f{t, order, {}};
    for (int v = 0; v < t->holo_count(); ++v) {
        Poly term = Poly::var(t, t->name(v));
        Poly sum = term;
        for (int k = 1; k <= order; ++k) {
            term = apply_field(term) * make_term(t, GaussRat(Rat(1, k)), {{"t", 1}});
            sum += term;
        }
        f.comps.insert_or_assign(t->name(v), truncate(sum, tr));
    }
    return f;
}

Poly formal_flow_defect(const ModelSurface& s, const FormalFlow& flow) {
    const TablePtr& t = flow.table;
    auto tr = time_truncation(t, flow.order);
    Poly F = retable(s.F, t);
    Poly G = im_part(Poly::var(t, s.wvar)) - F;
    std::map<int, Poly> images;
    for (int v = 0; v < t->holo_count(); ++v) {
        auto it = flow.comps.find(t->name(v));
        Poly img = it == flow.comps.end() ? Poly::var(t, t->name(v)) : it->second;
        images.emplace(t->conj_index(v), conj(img));
        images.emplace(v, std::move(img));
    }
    Poly composed = substitute_all(G, images, tr);
    int w = t->index(s.wvar);
    Poly iF = Poly::constant(t, GaussRat::i()) * F;
    Poly u = Poly::var(t, s.uvar);
    return substitute_all(composed, {{w, u + iF}, {t->conj_index(w), u - iF}}, tr);
}

bool exponentiate_check(const ModelSurface& s, const FieldJet& field, const FormalFlow& flow) {
    if (!s.exact) throw std::invalid_argument("exponentiate_check needs an exact surface");
    if (!tangency_residual(s, field).is_zero()) throw std::invalid_argument("field is not an infinitesimal automorphism");
    const TablePtr& t = flow.table;
    auto tr = time_truncation(t, flow.order - 1);
    int ti = t->index("t");
    std::map<int, Poly> images;
    for (int v = 0; v < t->holo_count(); ++v) {
        auto it = flow.comps.find(t->name(v));
        images.emplace(v, it == flow.comps.end() ? Poly::var(t, t->name(v)) : it->second);
    }
    for (const auto& [v, phi] : images)
        if (substitute(phi, "t", Poly(t)) != Poly::var(t, t->name(v))) return false;
    for (const auto& c : field.shape.components) {
        int v = t->index(c.target);
        Poly lhs = truncate(diff(images.at(v), ti), tr);
        Poly rhs = substitute_all(retable(field.at(c.name), t), images, tr);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace cr
