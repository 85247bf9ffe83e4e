#include "cr/fixtures.hpp"

#include <stdexcept>

namespace cr {

Rat ParamSampler::rat() {
    std::uniform_int_distribution<int> num(-97, 97), den(1, 97);
    int p = num(rng_);
    int q = den(rng_);
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Rat ParamSampler::positive_rat() {
    std::uniform_int_distribution<int> num(1, 97), den(1, 97);
    int p = num(rng_);
    int q = den(rng_);
    Rat r(p, q);
    r.canonicalize();
    return r;
}

GaussRat ParamSampler::gauss() {
    Rat re = rat();
    Rat im = rat();
    return GaussRat(re, im);
}

J6Params generic_j6_params(std::uint64_t seed) {
    ParamSampler g(seed);
    J6Params p;
    for (auto& x : p.r) x = g.gauss();
    for (auto& x : p.s) x = g.gauss();
    return p;
}

TwoNondegParams generic_pair_params(int pair_id, std::uint64_t seed) {
    ParamSampler g(seed);
    TwoNondegParams p;
    p.pair_id = pair_id;
    Rat k = g.positive_rat();
    Rat m = g.positive_rat();
    while (m == k) m = g.positive_rat();
    switch (pair_id) {
        case 1:
        case 4:
            p.k = k;
            p.m = m;
            break;
        case 2:
        case 3:
        case 5:
        case 6:
            p.k = k;
            break;
        case 7: {
            Rat im = g.rat();
            while (sgn(im) == 0) im = g.rat();
            p.m = GaussRat(g.rat(), im);
            break;
        }
        case 8:
            // m > 0 gives a pair equivalent to class 5
            p.m = GaussRat(Rat(-g.positive_rat()));
            break;
        case 9:
            break;
        default:
            throw std::invalid_argument("pair id must be 1..9");
    }
    for (auto& x : p.R) x = g.gauss();
    return p;
}

namespace {

struct Entry {
    std::string name;
    bool seeded;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = [] {
        std::vector<Entry> v{{"Q", false},
                             {"quadric-c2", false},
                             {"quadric-c3", false},
                             {"quadric-c3-mixed", false},
                             {"quadric-c4", false},
                             {"quadric-c4-mixed", false},
                             {"j6-zero", false},
                             {"j6-generic", true},
                             {"pair9-special", false},
                             {"pair9-special-r3", false}};
        for (int id = 1; id <= 9; ++id) v.push_back({"pair" + std::to_string(id) + "-generic", true});
        return v;
    }();
    return r;
}

ModelSurface renamed(ModelSurface s, const std::string& name) {
    s.name = name;
    return s;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
}

bool fixture_uses_seed(const std::string& name) {
    for (const auto& e : registry())
        if (e.name == name) return e.seeded;
    throw std::invalid_argument("unknown fixture: " + name);
}

Fixture make_fixture(const std::string& name, std::uint64_t seed) {
    bool seeded = fixture_uses_seed(name);
    std::optional<std::uint64_t> sd;
    if (seeded) sd = seed;
    if (name == "Q") return {name, renamed(cubic_q(), name), shape_q(), sd, "graded"};
    if (name.rfind("quadric-", 0) == 0) {
        int n = name[9] - '1';
        std::vector<int> sig(n, 1);
        if (name.size() > 10) sig.back() = -1;
        return {name, renamed(quadric(n, sig), name), shape_quadric(n), sd, "graded"};
    }
    if (name == "j6-zero") return {name, renamed(three_nondeg_j6({}), name), shape_j6(), sd, "V5"};
    if (name == "j6-generic")
        return {name, renamed(three_nondeg_j6(generic_j6_params(seed)), name), shape_j6(), sd, "V5"};
    if (name == "pair9-special" || name == "pair9-special-r3") {
        TwoNondegParams p;
        p.pair_id = 9;
        p.R = {name == "pair9-special" ? GaussRat(Rat(1, 2)) : GaussRat(3), 0, 0};
        return {name, renamed(two_nondeg(p), name), shape_two_nondeg_w1(), sd, "V5tilde"};
    }
    int id = name[4] - '0';
    return {name, renamed(two_nondeg(generic_pair_params(id, seed)), name), shape_two_nondeg_w1(), sd, "V5tilde"};
}

std::vector<std::string> space_names() { return {"graded", "V5", "full", "jet13", "V5tilde"}; }

JetShape shape_v5tilde() {
    JetShape sh = shape_two_nondeg_w2();
    const int mins[4] = {3, 3, 2, 5};
    for (std::size_t i = 0; i < sh.components.size(); ++i) sh.components[i].min_weight = mins[i];
    sh.name = "two-nondeg-w2-v5";
    return sh;
}

Space make_space(const Fixture& f, const std::string& name) {
    bool j6 = f.name.rfind("j6-", 0) == 0;
    bool pair = f.name.rfind("pair", 0) == 0;
    bool graded = f.name == "Q" || f.name.rfind("quadric-", 0) == 0;
    auto refuse = [&] { return std::invalid_argument("space " + name + " does not apply to fixture " + f.name); };
    if (name == "graded") {
        if (!graded) throw refuse();
        Window w = f.name == "Q" ? Window{-3, 3, 1, std::nullopt} : Window{-2, 4, 1, std::nullopt};
        return {name, f.shape, f.surface.ws, w};
    }
    if (name == "V5" || name == "full" || name == "jet13") {
        if (!j6) throw refuse();
        if (name == "V5") return {name, f.shape, f.surface.ws, {5, 9, 3, std::nullopt}};
        if (name == "full") return {name, f.shape, f.surface.ws, {0, 6, 3, std::nullopt}};
        JetShape sh = f.shape;
        for (auto& c : sh.components) c.min_weight = 1;
        sh.name += "-positive";
        return {name, sh, f.surface.ws, {1, 4, 3, 4}};
    }
    if (name == "V5tilde") {
        if (!pair) throw refuse();
        return {name, shape_v5tilde(), WeightSystem::preset("W2", f.surface.table()), {5, 10, 2, std::nullopt}};
    }
    throw std::invalid_argument("unknown space: " + name);
}

namespace {

FieldJet w2_jet(const ModelSurface& s) { return FieldJet(shape_v5tilde(), s.table()); }

// Truncation for component polynomials of a W2 jet of weight <= top.
TruncationSpec component_truncation(const ModelSurface& s, int top, int offset) {
    return WeightSystem::preset("W2", s.table()).truncation(top + offset);
}

Poly pair9_denominator_inverse(const ModelSurface& s, const GaussRat& r1, int top) {
    const TablePtr& t = s.table();
    Poly den = Poly::constant(t, 1) + make_term(t, 2 * r1.conj(), {{"zeta", 1}});
    int off = shape_v5tilde().component("g").offset;
    return series_inverse(den, component_truncation(s, top, off));
}

}  // namespace

FieldJet pair9_family(const ModelSurface& s, const GaussRat& r1, const GaussRat& n1, const GaussRat& n2, int top) {
    const TablePtr& t = s.table();
    const GaussRat I = GaussRat::i();
    auto T = [&](const GaussRat& c, const std::vector<std::pair<std::string, int>>& e) { return make_term(t, c, e); };
    FieldJet X = w2_jet(s);
    X["f1"] = T(I * n1.conj(), {{"z1", 2}});
    X["f2"] = T(2 * I * n1.conj(), {{"z1", 1}, {"z2", 1}}) + T(-n2.conj(), {{"z1", 2}}) + T(n1, {{"w", 1}});
    Poly num = T(n2, {{"z1", 1}}) + T(-I * n1, {{"z2", 1}}) + T(2 * I * n1.conj(), {{"z1", 1}, {"zeta", 1}});
    int off = shape_v5tilde().component("g").offset;
    X["g"] = mul(num, pair9_denominator_inverse(s, r1, top), component_truncation(s, top, off));
    X["h"] = T(2 * I * n1.conj(), {{"z1", 1}, {"w", 1}});
    return X;
}

FieldJet pair9_extra_direction(const ModelSurface& s, const GaussRat& r1, const Rat& tt, int top) {
    const TablePtr& t = s.table();
    FieldJet X = w2_jet(s);
    int off = shape_v5tilde().component("g").offset;
    X["g"] = mul(make_term(t, GaussRat(0, tt), {{"z1", 2}}), pair9_denominator_inverse(s, r1, top),
                 component_truncation(s, top, off));
    return X;
}

FieldJet pair_dilation(const ModelSurface& s) {
    const TablePtr& t = s.table();
    FieldJet X(shape_two_nondeg_w2(), t);
    X["f1"] = Poly::var(t, "z1");
    X["f2"] = Poly::var(t, "z2");
    X["h"] = make_term(t, 2, {{"w", 1}});
    return X;
}

FieldJet pair_h_constant(const ModelSurface& s, const Rat& c) {
    FieldJet X(shape_two_nondeg_w2(), s.table());
    X["h"] = Poly::constant(s.table(), c);
    return X;
}

}  // namespace cr
