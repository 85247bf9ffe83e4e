#include "cr/surfaces.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cr {

using Exps = std::vector<std::pair<std::string, int>>;

TablePtr coordinate_table(const std::vector<std::string>& zvars) {
    std::vector<std::string> holo = zvars;
    holo.push_back("w");
    return VarTable::make(holo, {"u"});
}

Poly pluriharmonic_part(const Poly& F) {
    const VarTable& t = *F.table();
    Poly r(F.table());
    for (const auto& [m, c] : F.terms()) {
        int hol = 0, anti = 0;
        for (int i = 0; i < t.size(); ++i) {
            if (t.kind(i) == VarKind::holo) hol += m.e[i];
            if (t.kind(i) == VarKind::anti) anti += m.e[i];
        }
        if (hol == 0 || anti == 0) r.add_term(m, c);
    }
    return r;
}

void validate_surface(const ModelSurface& s) {
    const VarTable& t = *s.table();
    if (!(*s.ws.table() == t)) throw std::invalid_argument("weight system and F use different tables");
    if (!is_conj_fixed(s.F)) throw std::invalid_argument("F is not real");
    int w = t.index(s.wvar);
    for (int v : {w, t.conj_index(w), t.index(s.uvar)})
        if (contains_var(s.F, v)) throw std::invalid_argument("F depends on " + t.name(v));
    for (const auto& [m, c] : s.F.terms())
        if (weight_of(m, s.ws) < 2) throw std::invalid_argument("F has a term of weight below 2");
    for (const auto& z : s.zvars)
        if (t.kind(t.index(z)) != VarKind::holo) throw std::invalid_argument(z + " is not holomorphic");
}

ModelSurface quadric(int n, const std::vector<int>& signature) {
    if (n < 1) throw std::invalid_argument("quadric needs n >= 1");
    if (static_cast<int>(signature.size()) != n) throw std::invalid_argument("signature length must equal n");
    std::vector<std::string> z;
    for (int k = 1; k <= n; ++k) z.push_back("z" + std::to_string(k));
    auto t = coordinate_table(z);
    Poly F(t);
    for (int k = 0; k < n; ++k) {
        if (signature[k] != 1 && signature[k] != -1) throw std::invalid_argument("signature entries must be +-1");
        F += make_term(t, signature[k], {{z[k], 1}, {z[k] + "bar", 1}});
    }
    std::string sig;
    for (int e : signature) sig += e > 0 ? '+' : '-';
    ModelSurface s{"quadric-" + std::to_string(n) + sig, WeightSystem::preset("W1", t), F, 2, true, z};
    validate_surface(s);
    return s;
}

ModelSurface three_nondeg_j6(const J6Params& p) {
    auto t = coordinate_table({"z", "zeta", "eta"});
    auto T = [&](const GaussRat& c, const Exps& e) { return make_term(t, c, e); };
    const auto& r = p.r;
    const auto& s = p.s;
    Poly F = T(1, {{"z", 1}, {"zbar", 1}});
    F += re2(T(1, {{"z", 2}, {"zetabar", 1}}));
    F += re2(T(1, {{"z", 3}, {"etabar", 1}})) + T(4, {{"z", 1}, {"zbar", 1}, {"zeta", 1}, {"zetabar", 1}});

    Poly f5 = T(r[0], {{"zbar", 4}, {"zeta", 1}}) + T(r[1], {{"zbar", 4}, {"eta", 1}}) +
              T(r[2], {{"z", 1}, {"zetabar", 2}, {"etabar", 2}}) + T(r[3], {{"z", 1}, {"etabar", 4}}) +
              T(4, {{"z", 2}, {"zeta", 1}, {"zetabar", 2}}) + T(6, {{"z", 2}, {"zbar", 1}, {"zeta", 1}, {"etabar", 1}});
    F += re2(f5);

    // r3 and r4 enter conjugated here: with the unconjugated coefficients the Levi minors
    // fail to vanish at weight 4 as soon as r3 or r4 is not real.
    Poly f6 = T(8 * r[0].conj(), {{"z", 3}, {"zbar", 1}, {"zeta", 1}, {"zetabar", 1}}) +
              T(8 * r[1].conj(), {{"z", 3}, {"zbar", 1}, {"zeta", 1}, {"etabar", 1}}) +
              T(2 * r[2].conj(), {{"z", 1}, {"eta", 2}, {"zetabar", 1}, {"zeta", 2}}) +
              T(2 * r[3].conj(), {{"z", 1}, {"eta", 4}, {"zetabar", 1}}) +
              T(s[0], {{"z", 1}, {"zbar", 4}, {"zeta", 1}}) + T(s[1], {{"zbar", 5}, {"zeta", 1}}) +
              T(s[2], {{"z", 1}, {"zbar", 4}, {"eta", 1}}) + T(s[3], {{"zbar", 5}, {"eta", 1}}) +
              T(s[4], {{"zbar", 4}, {"zeta", 2}}) + T(s[5], {{"zbar", 4}, {"zeta", 1}, {"eta", 1}}) +
              T(s[6], {{"zbar", 4}, {"eta", 2}}) + T(s[7], {{"zbar", 1}, {"eta", 5}}) +
              T(12, {{"zbar", 3}, {"zeta", 1}, {"zetabar", 1}, {"eta", 1}}) +
              T(12, {{"z", 1}, {"zbar", 2}, {"zeta", 2}, {"etabar", 1}});
    F += re2(f6);
    F += T(16, {{"z", 1}, {"zbar", 1}, {"zeta", 2}, {"zetabar", 2}});
    F += T(9, {{"z", 2}, {"zbar", 2}, {"eta", 1}, {"etabar", 1}});

    ModelSurface out{"j6", WeightSystem::preset("W1", t), F, 6, false, {"z", "zeta", "eta"}};
    validate_surface(out);
    return out;
}

void validate_pair_params(const TwoNondegParams& p) {
    const auto& k = p.k;
    const auto& m = p.m;
    auto positive_real = [](const GaussRat& x) { return x.is_real() && sgn(x.re()) > 0; };
    switch (p.pair_id) {
        case 1:
        case 4:
            if (!positive_real(k) || !positive_real(m) || k == m)
                throw std::invalid_argument("pair " + std::to_string(p.pair_id) + " needs real k, m > 0 with k != m");
            break;
        case 2:
        case 3:
        case 5:
        case 6:
            if (!positive_real(k)) throw std::invalid_argument("pair " + std::to_string(p.pair_id) + " needs real k > 0");
            break;
        case 7:
            if (m.is_real()) throw std::invalid_argument("pair 7 needs a non-real m");
            break;
        case 8:
            if (!m.is_real() || m.is_zero()) throw std::invalid_argument("pair 8 needs a nonzero real m");
            break;
        case 9:
            break;
        default:
            throw std::invalid_argument("pair id must be 1..9");
    }
}

PairForms pair_forms(const TwoNondegParams& p) {
    validate_pair_params(p);
    PairForms f{};
    int id = p.pair_id;
    if (id <= 3) {
        f.H = {{{1, 0}, {0, 1}}};
    } else if (id <= 6) {
        f.H = {{{1, 0}, {0, -1}}};
    } else {
        f.H = {{{0, 1}, {1, 0}}};
    }
    switch (id) {
        case 1:
        case 4:
            f.K = {{{p.k, 0}, {0, p.m}}};
            break;
        case 2:
        case 5:
            f.K = {{{p.k, 0}, {0, p.k}}};
            break;
        case 3:
        case 6:
            f.K = {{{p.k, 0}, {0, 0}}};
            break;
        case 7:
        case 8:
            f.K = {{{1, 0}, {0, p.m}}};
            break;
        default:
            f.K = {{{1, 0}, {0, 0}}};
    }
    return f;
}

Poly forced_s_form(const TwoNondegParams& p, const TablePtr& t) {
    validate_pair_params(p);
    auto abs2 = [&](const GaussRat& c, int a) {
        std::string z = "z" + std::to_string(a);
        return make_term(t, c, {{z, 1}, {z + "bar", 1}});
    };
    auto mixed = [&](const GaussRat& c, const std::string& a, const std::string& bbar) {
        return make_term(t, c, {{a, 1}, {bbar, 1}});
    };
    const GaussRat k2 = p.k * p.k, m2 = p.m * p.m;
    switch (p.pair_id) {
        case 1: return abs2(4 * k2, 1) + abs2(4 * m2, 2);
        case 2: return abs2(4 * k2, 1) + abs2(4 * k2, 2);
        case 3:
        case 6: return abs2(4 * k2, 1);
        case 4: return abs2(4 * k2, 1) + abs2(-4 * m2, 2);
        case 5: return abs2(4 * k2, 1) + abs2(-4 * k2, 2);
        case 7: return mixed(4 * p.m.conj(), "z1", "z2bar") + mixed(4 * p.m, "z2", "z1bar");
        case 8: return mixed(4 * p.m, "z1", "z2bar") + mixed(4 * p.m, "z2", "z1bar");
        default: return Poly(t);
    }
}

ModelSurface two_nondeg(const TwoNondegParams& p) {
    auto t = coordinate_table({"z1", "z2", "zeta"});
    PairForms f = pair_forms(p);
    const char* z[2] = {"z1", "z2"};
    Poly F(t);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            F += make_term(t, f.H[a][b], {{z[a], 1}, {std::string(z[b]) + "bar", 1}});
    Poly K(t);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) K += make_term(t, f.K[a][b], {{z[a], 1}, {z[b], 1}});
    Poly zetabar = Poly::var(t, "zetabar");
    F += re2(K * zetabar);
    Poly R = make_term(t, p.R[0], {{"z1", 2}}) + make_term(t, p.R[1], {{"z1", 1}, {"z2", 1}}) +
             make_term(t, p.R[2], {{"z2", 2}});
    F += re2(R * zetabar * zetabar);
    F += forced_s_form(p, t) * make_term(t, 1, {{"zeta", 1}, {"zetabar", 1}});
    if (p.P) F += re2(*p.P * zetabar);
    if (p.Q) F += re2(*p.Q * zetabar);
    if (p.T) F += *p.T;
    ModelSurface s{"pair" + std::to_string(p.pair_id), WeightSystem::preset("W1", t), F, 4, false,
                   {"z1", "z2", "zeta"}};
    validate_surface(s);
    if (!pluriharmonic_part(F).is_zero()) throw std::invalid_argument("extra terms introduce pluriharmonic part");
    return s;
}

ModelSurface cubic_q() {
    auto t = coordinate_table({"z1", "z2", "zeta"});
    Poly F = re2(make_term(t, 1, {{"z1", 1}, {"zetabar", 1}}) + make_term(t, 1, {{"z2", 1}, {"zetabar", 2}}));
    ModelSurface s{"Q", WeightSystem::preset("W3", t), F, 3, true, {"z1", "z2", "zeta"}};
    validate_surface(s);
    return s;
}

ModelSurface cubic_q_permuted() {
    auto t = coordinate_table({"z1", "z2", "zeta"});
    Poly F = re2(make_term(t, 1, {{"z1", 1}, {"z2bar", 1}}) + make_term(t, 1, {{"z1", 2}, {"zetabar", 1}}));
    std::map<std::string, int> w{{"z1", 1}, {"z1bar", 1}, {"z2", 2},   {"z2bar", 2}, {"zeta", 1},
                                 {"zetabar", 1}, {"w", 3},  {"wbar", 3}, {"u", 3}};
    ModelSurface s{"Q-permuted", WeightSystem(t, w), F, 3, true, {"z1", "z2", "zeta"}};
    validate_surface(s);
    return s;
}

namespace {

Poly mixed_derivative(const Poly& F, const std::string& a, const std::string& bbar) {
    return diff(diff(F, a), bbar);
}

}  // namespace

std::array<Poly, 3> levi_minors(const ModelSurface& s, const std::string& zv, const std::string& zetav,
                                const std::string& etav) {
    const Poly& F = s.F;
    for (const auto& v : {zv, zetav, etav}) s.table()->index(v);
    auto tr = s.exact ? TruncationSpec::none() : s.ws.truncation(s.reliable_weight());
    auto D = [&](const std::string& a, const std::string& b) { return mixed_derivative(F, a, b + "bar"); };
    Poly Fzz = D(zv, zv), Fss = D(zetav, zetav), Fee = D(etav, etav);
    Poly Fzs = D(zv, zetav), Fsz = D(zetav, zv), Fse = D(zetav, etav), Fze = D(zv, etav);
    Poly d1 = mul(Fzz, Fss, tr) - mul(Fzs, conj(Fzs), tr);
    Poly d2 = mul(Fzz, Fse, tr) - mul(Fsz, Fze, tr);
    Poly d3 = mul(Fzz, Fee, tr) - mul(Fze, conj(Fze), tr);
    return {d1, d2, d3};
}

Poly hessian3_det(const ModelSurface& s) {
    if (s.zvars.size() != 3) throw std::invalid_argument("hessian3_det needs exactly three non-w coordinates");
    auto tr = s.exact ? TruncationSpec::none() : s.ws.truncation(s.reliable_weight());
    std::vector<std::vector<Poly>> M;
    for (const auto& a : s.zvars) {
        M.emplace_back();
        for (const auto& b : s.zvars) M.back().push_back(mixed_derivative(s.F, a, b + "bar"));
    }
    auto m2 = [&](int r1, int r2, int c1, int c2) {
        return mul(M[r1][c1], M[r2][c2], tr) - mul(M[r1][c2], M[r2][c1], tr);
    };
    return mul(M[0][0], m2(1, 2, 1, 2), tr) - mul(M[0][1], m2(1, 2, 0, 2), tr) + mul(M[0][2], m2(1, 2, 0, 1), tr);
}

std::string surface_json(const ModelSurface& s) {
    using nlohmann::json;
    const VarTable& t = *s.table();
    json j;
    j["name"] = s.name;
    j["variables"] = {{"holo", t.holo()}, {"anti", t.anti()}, {"real", t.real()}};
    j["weights"] = s.ws.as_map();
    j["trunc"] = s.trunc;
    j["exact"] = s.exact;
    j["zvars"] = s.zvars;
    json terms = json::array();
    for (const auto& [m, c] : s.F.terms()) {
        json e = json::object();
        for (int i = 0; i < t.size(); ++i)
            if (m.e[i]) e[t.name(i)] = int(m.e[i]);
        terms.push_back(json::array({rat_str(c.re()), rat_str(c.im()), e}));
    }
    j["F"] = terms;
    return j.dump();
}

ModelSurface surface_from_json(const std::string& text) {
    using nlohmann::json;
    json j = json::parse(text);
    auto holo = j.at("variables").at("holo").get<std::vector<std::string>>();
    auto anti = j.at("variables").at("anti").get<std::vector<std::string>>();
    auto real = j.at("variables").at("real").get<std::vector<std::string>>();
    auto t = VarTable::make(holo, real, anti);
    WeightSystem ws(t, j.at("weights").get<std::map<std::string, int>>());
    Poly F(t);
    for (const auto& term : j.at("F")) {
        Monomial m;
        for (const auto& [v, k] : term.at(2).items()) {
            int e = k.get<int>();
            if (e <= 0 || e > 255) throw std::invalid_argument("bad exponent in surface JSON");
            m.e[t->index(v)] = static_cast<std::uint8_t>(e);
        }
        F.add_term(m, GaussRat::parse(term.at(0).get<std::string>(), term.at(1).get<std::string>()));
    }
    ModelSurface s{j.at("name").get<std::string>(), ws, F, j.at("trunc").get<int>(), j.at("exact").get<bool>(),
                   j.at("zvars").get<std::vector<std::string>>()};
    validate_surface(s);
    return s;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << int(md[k]);
    return os.str();
}

}  // namespace cr
