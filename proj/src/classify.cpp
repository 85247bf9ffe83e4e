#include "cr/classify.hpp"

#include "cr/kernel.hpp"

#include <stdexcept>

namespace cr {

Mat2 mat_identity() { return {{{1, 0}, {0, 1}}}; }

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2 mat_conj(const Mat2& a) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j].conj();
    return r;
}

Mat2 mat_transpose(const Mat2& a) { return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }

Mat2 mat_scale(const Mat2& a, const GaussRat& c) {
    Mat2 r = a;
    for (auto& row : r)
        for (auto& x : row) x *= c;
    return r;
}

GaussRat mat_det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
GaussRat mat_trace(const Mat2& a) { return a[0][0] + a[1][1]; }

Mat2 mat_inverse(const Mat2& a) {
    GaussRat d = mat_det(a);
    if (d.is_zero()) throw std::invalid_argument("singular 2x2 matrix");
    GaussRat inv = d.inverse();
    return {{{a[1][1] * inv, -a[0][1] * inv}, {-a[1][0] * inv, a[0][0] * inv}}};
}

namespace {

bool is_scalar(const Mat2& a) { return a[0][1].is_zero() && a[1][0].is_zero() && a[0][0] == a[1][1]; }

bool is_zero(const Mat2& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

std::optional<Rat> rational_sqrt(const Rat& x) {
    if (sgn(x) < 0) return std::nullopt;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Rat(sqrt(n), sqrt(d));
}

Rat real_of(const GaussRat& x, const char* what) {
    if (!x.is_real()) throw std::logic_error(std::string(what) + " is not real");
    return x.re();
}

}  // namespace

void validate_form_pair(const FormPair& p) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (p.H[i][j] != p.H[j][i].conj()) throw std::invalid_argument("H is not Hermitian");
    if (p.K[0][1] != p.K[1][0]) throw std::invalid_argument("K is not symmetric");
    if (mat_det(p.H).is_zero()) throw std::invalid_argument("the Hermitian form is degenerate");
    if (is_zero(p.K)) throw std::invalid_argument("K vanishes identically");
}

FormPair normal_form(const TwoNondegParams& p) {
    PairForms f = pair_forms(p);
    return {f.H, f.K};
}

PairClass classify_pair(const FormPair& p) {
    validate_form_pair(p);
    Rat detH = real_of(mat_det(p.H), "det H");
    bool definite = sgn(detH) > 0;
    bool rank1 = mat_det(p.K).is_zero();
    Mat2 X = mat_mul(mat_inverse(p.H), p.K);
    Mat2 N = mat_mul(mat_conj(X), X);
    Rat tr = real_of(mat_trace(N), "trace N");
    Rat det = real_of(mat_det(N), "det N");
    Rat disc = tr * tr - 4 * det;

    PairClass c;
    c.params["trN"] = tr;
    c.params["detN"] = det;
    auto need_positive = [&](const Rat& x) {
        if (sgn(x) <= 0) throw std::invalid_argument("pair lies outside the nine normal-form classes");
    };
    if (definite) {
        if (rank1) {
            c.id = 3;
            c.params["k2"] = tr;
        } else if (is_scalar(N)) {
            c.id = 2;
            c.params["k2"] = real_of(N[0][0], "N");
        } else {
            if (sgn(disc) <= 0) throw std::invalid_argument("pair lies outside the nine normal-form classes");
            c.id = 1;
        }
    } else if (rank1) {
        if (is_zero(N)) {
            c.id = 9;
        } else {
            c.id = 6;
            c.params["k2"] = tr;
        }
    } else if (is_scalar(N)) {
        Rat v = real_of(N[0][0], "N");
        if (sgn(v) > 0) {
            c.id = 5;
            c.params["k2"] = v;
        } else {
            c.id = 8;
            c.params["m"] = v;
        }
    } else if (sgn(disc) < 0) {
        c.id = 7;
        c.params["m_re"] = tr / 2;
        c.params["m_im2"] = det - tr * tr / 4;
    } else if (sgn(disc) > 0) {
        need_positive(tr);
        need_positive(det);
        c.id = 4;
    } else {
        throw std::invalid_argument("N has a non-diagonalizable block; pair lies outside the nine classes");
    }
    if (c.id == 1 || c.id == 4) {
        // eigenvalues (tr +- sqrt(disc)) / 2 of N are k^2 > m^2 (ordering is a choice of labels)
        if (auto s = rational_sqrt(disc)) {
            c.params["k2"] = (tr + *s) / 2;
            c.params["m2"] = (tr - *s) / 2;
        }
    }

    // Witness: the identity when the input already is a normal form with exactly known parameters.
    TwoNondegParams q;
    q.pair_id = c.id;
    bool known = true;
    auto root = [&](const char* key) -> std::optional<Rat> {
        auto it = c.params.find(key);
        if (it == c.params.end()) return std::nullopt;
        return rational_sqrt(it->second);
    };
    switch (c.id) {
        case 1:
        case 4:
            q.k = p.K[0][0];
            q.m = p.K[1][1];
            break;
        case 2:
        case 3:
        case 5:
        case 6: {
            auto k = root("k2");
            known = k.has_value();
            if (known) q.k = *k;
            break;
        }
        case 7:
            q.m = p.K[1][1];
            known = !q.m.is_real();
            break;
        case 8:
            q.m = c.params["m"];
            break;
        default:
            break;
    }
    if (known) {
        try {
            FormPair nf = normal_form(q);
            if (nf.H == p.H && nf.K == p.K) c.witness = mat_identity();
        } catch (const std::invalid_argument&) {
        }
    }
    return c;
}

int g0_dim(const FormPair& p) {
    validate_form_pair(p);
    // Unknowns: Re/Im of the four entries of A, then r, Re b, Im b.
    std::vector<std::vector<Rat>> cols;
    for (int u = 0; u < 11; ++u) {
        Mat2 A{};
        Rat r = 0;
        GaussRat b;
        if (u < 8) {
            int e = u / 2;
            A[e / 2][e % 2] = u % 2 == 0 ? GaussRat(1) : GaussRat::i();
        } else if (u == 8) {
            r = 1;
        } else if (u == 9) {
            b = GaussRat(1);
        } else {
            b = GaussRat::i();
        }
        Mat2 At = mat_transpose(A);
        Mat2 EH = mat_mul(At, p.H);
        Mat2 HA = mat_mul(p.H, mat_conj(A));
        Mat2 EK = mat_mul(At, p.K);
        Mat2 KA = mat_mul(p.K, A);
        std::vector<Rat> col;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                GaussRat h = EH[i][j] + HA[i][j] - GaussRat(r) * p.H[i][j];
                GaussRat k = EK[i][j] + KA[i][j] - (GaussRat(r) - b.conj()) * p.K[i][j];
                col.push_back(h.re());
                col.push_back(h.im());
                col.push_back(k.re());
                col.push_back(k.im());
            }
        cols.push_back(std::move(col));
    }
    SparseMatrix M(16, 11);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 11; ++j) M.push(i, j, cols[j][i]);
    return 11 - rank(M);
}

int g0_dim(int class_id) {
    TwoNondegParams q;
    q.pair_id = class_id;
    switch (class_id) {
        case 1:
        case 4:
            q.k = 1;
            q.m = 2;
            break;
        case 7:
            q.m = GaussRat::i();
            break;
        case 8:
            q.m = -1;
            break;
        default:
            break;
    }
    return g0_dim(normal_form(q));
}

FormPair jet_action(const JetGroupElement& e, const FormPair& p) {
    validate_form_pair(p);
    if (sgn(e.rho) == 0 || e.beta.is_zero()) throw std::invalid_argument("rho and beta must be nonzero");
    Mat2 lhs = mat_mul(mat_mul(mat_transpose(e.C), p.H), mat_conj(e.C));
    if (lhs != mat_scale(p.H, GaussRat(e.rho))) throw std::invalid_argument("C^T H conj(C) != rho H");
    Mat2 Ci = mat_inverse(e.C);
    Mat2 K = mat_mul(mat_mul(mat_transpose(Ci), p.K), Ci);
    return {p.H, mat_scale(K, GaussRat(e.rho) / e.beta.conj())};
}

JetGroupElement compose(const JetGroupElement& first, const JetGroupElement& second) {
    JetGroupElement r;
    r.C = mat_mul(second.C, first.C);
    r.rho = first.rho * second.rho;
    r.beta = first.beta * second.beta;
    return r;
}

ModelSurface surface_from_pair(const FormPair& p) {
    validate_form_pair(p);
    auto t = coordinate_table({"z1", "z2", "zeta"});
    const char* z[2] = {"z1", "z2"};
    Poly F(t), K(t);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            F += make_term(t, p.H[a][b], {{z[a], 1}, {std::string(z[b]) + "bar", 1}});
            K += make_term(t, p.K[a][b], {{z[a], 1}, {z[b], 1}});
        }
    F += re2(K * Poly::var(t, "zetabar"));
    ModelSurface s{"pair-forms", WeightSystem::preset("W1", t), F, 3, false, {"z1", "z2", "zeta"}};
    validate_surface(s);
    return s;
}

FormPair pair_of_surface(const ModelSurface& s) {
    const TablePtr& t = s.table();
    FormPair p{};
    const char* z[2] = {"z1", "z2"};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            p.H[a][b] = s.F.coeff(make_term(t, 1, {{z[a], 1}, {std::string(z[b]) + "bar", 1}}).terms().begin()->first);
            if (a <= b) {
                GaussRat c = s.F.coeff(make_term(t, 1, {{z[a], 1}, {z[b], 1}, {"zetabar", 1}}).terms().begin()->first);
                p.K[a][b] = p.K[b][a] = a == b ? c : c / GaussRat(2);
            }
        }
    return p;
}

ModelSurface jet_action(const JetGroupElement& e, const ModelSurface& s) {
    return surface_from_pair(jet_action(e, pair_of_surface(s)));
}

namespace {

JetShape shape_without_constants() {
    JetShape sh = shape_j6();
    for (auto& c : sh.components) c.min_weight = 1;
    return sh;
}

}  // namespace

int jet13_dim_check(const ModelSurface& s) {
    LinearizedOperator op(s, shape_without_constants(), s.ws);
    return param_bound(op, {1, 4, 3, 4}).window_kernel_dim;
}

int jet13_uniqueness_slice(const ModelSurface& s, int hi) {
    LinearizedOperator op(s, shape_j6(), s.ws);
    return param_bound(op, {5, hi, 3, std::nullopt}).window_kernel_dim;
}

}  // namespace cr
