#include "cr/oracle.hpp"

#include "cr/grading.hpp"

#include <stdexcept>

namespace cr {

namespace {

constexpr std::uint64_t kP = 1000003;  // p = 3 mod 4, so F_p[i] is a field

struct Cx {
    std::uint64_t re = 0, im = 0;
};

std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % kP; }
std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + kP - b) % kP; }
std::uint64_t mulp(std::uint64_t a, std::uint64_t b) { return a * b % kP; }

Cx operator+(Cx a, Cx b) { return {add(a.re, b.re), add(a.im, b.im)}; }
Cx operator*(Cx a, Cx b) {
    return {sub(mulp(a.re, b.re), mulp(a.im, b.im)), add(mulp(a.re, b.im), mulp(a.im, b.re))};
}
Cx conj(Cx a) { return {a.re, sub(0, a.im)}; }
Cx from_int(long v) { return {static_cast<std::uint64_t>((v % long(kP) + long(kP)) % long(kP)), 0}; }
const Cx kOne{1, 0}, kI{0, 1};

// Exponents over z_1..z_n, zbar_1..zbar_n, u.
using Mono = std::vector<int>;
using MPoly = std::map<Mono, Cx>;

void accumulate(MPoly& p, const Mono& m, Cx c) {
    Cx& s = p[m];
    s = s + c;
    if (s.re == 0 && s.im == 0) p.erase(m);
}

MPoly mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            accumulate(r, m, ca * cb);
        }
    return r;
}

MPoly scale(const MPoly& a, Cx c) {
    MPoly r;
    for (const auto& [m, v] : a) accumulate(r, m, v * c);
    return r;
}

std::uint64_t inverse(std::uint64_t a) {
    std::uint64_t r = 1, e = kP - 2;
    while (e) {
        if (e & 1) r = mulp(r, a);
        a = mulp(a, a);
        e >>= 1;
    }
    return r;
}

int rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        std::uint64_t inv = inverse(rows[rank][c]);
        for (auto& x : rows[rank]) x = mulp(x, inv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || !rows[r][c]) continue;
            std::uint64_t f = rows[r][c];
            for (int k = c; k < cols; ++k) rows[r][k] = sub(rows[r][k], mulp(f, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

// All exponent vectors of length n with sum equal to d.
void compositions(int n, int d, Mono& cur, int i, std::vector<Mono>& out) {
    if (i == n - 1) {
        cur[i] = d;
        out.push_back(cur);
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[i] = k;
        compositions(n, d - k, cur, i + 1, out);
    }
}

}  // namespace

std::map<int, int> quadric_ansatz_profile(const std::vector<int>& signature, int lo, int hi) {
    const int n = static_cast<int>(signature.size());
    if (n < 1) throw std::invalid_argument("empty signature");
    const int nv = 2 * n + 1;
    auto var = [&](int i) {
        Mono m(nv, 0);
        m[i] = 1;
        return MPoly{{m, kOne}};
    };
    MPoly P;
    for (int k = 0; k < n; ++k) {
        Mono m(nv, 0);
        m[k] = 1;
        m[n + k] = 1;
        accumulate(P, m, from_int(signature[k]));
    }
    MPoly u = var(2 * n);
    MPoly w = u, wb = u;
    for (const auto& [m, c] : P) {
        accumulate(w, m, c * kI);
        accumulate(wb, m, c * conj(kI));
    }
    auto zpow = [&](const Mono& a, bool bar) {
        Mono m(nv, 0);
        for (int k = 0; k < n; ++k) m[(bar ? n : 0) + k] = a[k];
        return MPoly{{m, kOne}};
    };
    std::map<int, MPoly> wp{{0, MPoly{{Mono(nv, 0), kOne}}}}, wbp = wp;
    auto wpow = [&](int b, bool bar) -> const MPoly& {
        auto& cache = bar ? wbp : wp;
        for (int k = 1; k <= b; ++k)
            if (!cache.count(k)) cache[k] = mul(cache[k - 1], bar ? wb : w);
        return cache[b];
    };

    std::map<int, int> out;
    for (int mu = lo; mu <= hi; ++mu) {
        // Each unknown c * z^a w^b in slot k (k < n: f_k, k = n: e) with c in {1, i}.
        std::vector<MPoly> images;
        for (int slot = 0; slot <= n; ++slot) {
            int wt = slot < n ? mu + 1 : mu + 2;
            for (int b = 0; 2 * b <= wt; ++b) {
                int d = wt - 2 * b;
                std::vector<Mono> as;
                Mono cur(n, 0);
                compositions(n, d, cur, 0, as);
                for (const auto& a : as)
                    for (Cx c : {kOne, kI}) {
                        MPoly hol = scale(mul(zpow(a, false), wpow(b, false)), c);
                        MPoly anti = scale(mul(zpow(a, true), wpow(b, true)), conj(c));
                        MPoly img;
                        if (slot == n) {
                            img = hol;
                            for (const auto& [m, v] : anti) accumulate(img, m, v * from_int(-1));
                        } else {
                            // -2i eps (f zbar_k + conj(f) z_k)
                            Cx k = kI * from_int(-2 * signature[slot]);
                            img = scale(mul(hol, var(n + slot)), k);
                            for (const auto& [m, v] : mul(anti, var(slot))) accumulate(img, m, v * k);
                        }
                        images.push_back(std::move(img));
                    }
            }
        }
        std::map<Mono, int> row_of;
        for (const auto& img : images)
            for (const auto& [m, v] : img) row_of.emplace(m, 0);
        int r = 0;
        for (auto& [m, i] : row_of) i = r++;
        int cols = static_cast<int>(images.size());
        std::vector<std::vector<std::uint64_t>> rows(2 * row_of.size(), std::vector<std::uint64_t>(cols, 0));
        for (int j = 0; j < cols; ++j)
            for (const auto& [m, v] : images[j]) {
                int i = row_of.at(m);
                rows[2 * i][j] = v.re;
                rows[2 * i + 1][j] = v.im;
            }
        out[mu] = cols - rank_mod_p(std::move(rows), cols);
    }
    return out;
}

Poly s_form_from_hessian(const TwoNondegParams& p, const TablePtr& t) {
    PairForms f = pair_forms(p);
    const char* z[2] = {"z1", "z2"};
    Poly F(t);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            F += make_term(t, f.H[a][b], {{z[a], 1}, {std::string(z[b]) + "bar", 1}});
            F += make_term(t, f.K[a][b], {{z[a], 1}, {z[b], 1}, {"zetabar", 1}});
            F += make_term(t, f.K[a][b].conj(), {{std::string(z[a]) + "bar", 1}, {std::string(z[b]) + "bar", 1}, {"zeta", 1}});
        }
    const char* x[3] = {"z1", "z2", "zeta"};
    Poly h[3][3] = {{Poly(t), Poly(t), Poly(t)}, {Poly(t), Poly(t), Poly(t)}, {Poly(t), Poly(t), Poly(t)}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) h[a][b] = diff(diff(F, x[a]), std::string(x[b]) + "bar");
    Poly det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
               h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    Poly d2 = graded_component(det, WeightSystem::preset("W1", t), 2);
    GaussRat detH = f.H[0][0] * f.H[1][1] - f.H[0][1] * f.H[1][0];
    return Poly::constant(t, -detH.inverse()) * d2;
}

std::int64_t monomial_count(const std::vector<int>& weights, int mu) {
    if (mu < 0) return 0;
    std::vector<std::int64_t> ways(mu + 1, 0);
    ways[0] = 1;
    for (int w : weights) {
        if (w <= 0) throw std::invalid_argument("weights must be positive");
        for (int s = w; s <= mu; ++s) ways[s] += ways[s - w];
    }
    return ways[mu];
}

}  // namespace cr
