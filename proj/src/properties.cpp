#include "cr/fixtures.hpp"
#include "cr/oracle.hpp"
#include "cr/suites.hpp"

#include <algorithm>
#include <numeric>

namespace cr {

namespace {

const std::vector<std::string> kVars = {"z1", "z2", "zeta"};

Poly random_poly(ParamSampler& g, std::mt19937_64& rng, const TablePtr& t, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms), var(0, t->size() - 1), exp(0, 2);
    Poly p(t);
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m;
        for (int j = 0; j < 3; ++j) m.e[var(rng)] = static_cast<std::uint8_t>(exp(rng));
        p.add_term(m, g.gauss());
    }
    return p;
}

struct Tally {
    PropertyOutcome out;
    void record(bool ok, const std::string& what) {
        ++out.cases;
        if (!ok) {
            if (out.failures == 0) out.first_failure = what;
            ++out.failures;
        }
    }
};

SparseMatrix random_matrix(ParamSampler& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 8), coin(0, 2);
    int r = dim(rng), c = dim(rng);
    SparseMatrix M(r, c);
    // Low-rank matrices are made by repeating combinations of a few seed rows.
    int seeds = std::uniform_int_distribution<int>(1, r)(rng);
    std::vector<std::vector<Rat>> base(seeds, std::vector<Rat>(c));
    for (auto& row : base)
        for (auto& x : row)
            if (coin(rng) == 0) x = g.rat();
    for (int i = 0; i < r; ++i) {
        std::vector<Rat> row(c);
        if (i < seeds) {
            row = base[i];
        } else {
            for (int s = 0; s < seeds; ++s) {
                Rat f = coin(rng) == 0 ? g.rat() : Rat(0);
                for (int j = 0; j < c; ++j) row[j] += f * base[s][j];
            }
        }
        for (int j = 0; j < c; ++j) M.push(i, j, row[j]);
    }
    return M;
}

SparseMatrix transpose(const SparseMatrix& M) {
    SparseMatrix T(M.cols, M.rows);
    std::vector<std::vector<std::pair<int, Rat>>> cols(M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (const auto& [j, v] : M.row[i]) cols[j].push_back({i, v});
    for (int j = 0; j < M.cols; ++j)
        for (const auto& [i, v] : cols[j]) T.push(j, i, v);
    return T;
}

SparseMatrix permuted(const SparseMatrix& M, const std::vector<int>& rperm, const std::vector<int>& cperm) {
    SparseMatrix P(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i) {
        SparseRow r;
        for (const auto& [j, v] : M.row[rperm[i]]) r.push_back({cperm[j], v});
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [j, v] : r) P.push(i, j, v);
    }
    return P;
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

ModelSurface reorder(const ModelSurface& s, const std::vector<std::string>& zvars) {
    TablePtr t = coordinate_table(zvars);
    ModelSurface r = s;
    r.F = retable(s.F, t);
    r.ws = WeightSystem(t, s.ws.as_map());
    r.zvars = zvars;
    return r;
}

}  // namespace

PropertyOutcome property_ring_axioms(std::uint64_t seed, int cases) {
    ParamSampler g(seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    TablePtr t = coordinate_table(kVars);
    Tally tally;
    Poly one = Poly::constant(t, 1), zero(t);
    for (int k = 0; k < cases; ++k) {
        Poly a = random_poly(g, rng, t, 5), b = random_poly(g, rng, t, 5), c = random_poly(g, rng, t, 5);
        bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
                  a * (b + c) == a * b + a * c && a - a == zero && one * a == a && a + zero == a &&
                  power(a + b, 2) == a * a + a * b * Poly::constant(t, 2) + b * b;
        tally.record(ok, "ring axioms, case " + std::to_string(k));
    }
    return tally.out;
}

PropertyOutcome property_involution(std::uint64_t seed, int cases) {
    ParamSampler g(seed);
    std::mt19937_64 rng(seed ^ 0x51ed270b27f3c2a1ULL);
    TablePtr t = coordinate_table(kVars);
    Tally tally;
    for (int k = 0; k < cases; ++k) {
        Poly a = random_poly(g, rng, t, 6), b = random_poly(g, rng, t, 6);
        bool ok = conj(conj(a)) == a && conj(a * b) == conj(a) * conj(b) && conj(a + b) == conj(a) + conj(b) &&
                  is_conj_fixed(re2(a)) && is_conj_fixed(im_part(a)) &&
                  re2(a) + Poly::constant(t, GaussRat(0, 2)) * im_part(a) == a * Poly::constant(t, 2);
        tally.record(ok, "involution laws, case " + std::to_string(k));
    }
    return tally.out;
}

PropertyOutcome property_grading_partition(std::uint64_t seed, int cases) {
    ParamSampler g(seed);
    std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dULL);
    TablePtr t = coordinate_table(kVars);
    const std::vector<WeightSystem> systems = {WeightSystem::preset("W1", t), WeightSystem::preset("W2", t),
                                               WeightSystem::preset("W3", t)};
    Tally tally;
    for (int k = 0; k < cases; ++k) {
        const WeightSystem& ws = systems[k % systems.size()];
        Poly a = random_poly(g, rng, t, 8);
        Poly sum(t);
        bool ok = true;
        std::size_t terms = 0;
        for (const auto& [mu, part] : graded_components(a, ws)) {
            ok = ok && !part.is_zero() && is_weighted_homogeneous(part, ws, mu) && graded_component(a, ws, mu) == part;
            terms += part.size();
            sum += part;
        }
        ok = ok && sum == a && terms == a.size();
        // Monomial bases against a direct count of weighted compositions.
        int mu = std::uniform_int_distribution<int>(0, 9)(rng);
        std::vector<std::string> vars = {"z1", "z2", "zeta", "w"};
        std::vector<int> weights;
        for (const auto& v : vars) weights.push_back(ws.weight(v));
        auto basis = monomial_basis(vars, ws, mu);
        ok = ok && static_cast<std::int64_t>(basis.size()) == monomial_count(weights, mu);
        for (const auto& m : basis) ok = ok && weight_of(m, ws) == mu;
        tally.record(ok, "grading partition under " + ws.label() + ", case " + std::to_string(k));
    }
    return tally.out;
}

PropertyOutcome property_rank_nullity(std::uint64_t seed, int cases) {
    ParamSampler g(seed);
    std::mt19937_64 rng(seed ^ 0x94d049bb133111ebULL);
    Tally tally;
    for (int k = 0; k < cases; ++k) {
        SparseMatrix M = random_matrix(g, rng);
        RowEchelon E = echelon(M);
        auto K = E.kernel();
        bool ok = E.rank() + static_cast<int>(K.size()) == M.cols && rank(transpose(M)) == E.rank();
        SparseMatrix KM(static_cast<int>(K.size()), M.cols);
        for (std::size_t i = 0; i < K.size(); ++i) {
            for (const auto& y : M.apply(K[i])) ok = ok && sgn(y) == 0;
            for (int j = 0; j < M.cols; ++j) KM.push(static_cast<int>(i), j, K[i][j]);
        }
        ok = ok && rank(KM) == static_cast<int>(K.size());
        tally.record(ok, "rank-nullity, case " + std::to_string(k));
    }
    return tally.out;
}

PropertyOutcome property_basis_order(std::uint64_t seed, int cases) {
    ParamSampler g(seed);
    std::mt19937_64 rng(seed ^ 0xbf58476d1ce4e5b9ULL);
    Tally tally;

    // Dimension outputs under every reordering of the coordinates.
    ModelSurface q = cubic_q();
    LinearizedOperator op(q, shape_q(), q.ws);
    GradedProfile ref = graded_profile(op, -3, 3);
    std::vector<std::string> order = kVars;
    std::sort(order.begin(), order.end());
    do {
        ModelSurface r = reorder(q, order);
        LinearizedOperator o2(r, shape_q(), r.ws);
        tally.record(graded_profile(o2, -3, 3).dims == ref.dims, "profile of Q under coordinate order change");
    } while (std::next_permutation(order.begin(), order.end()));

    // Per-weight operator blocks under random row and column permutations.
    std::vector<SparseMatrix> blocks;
    for (int mu = -3; mu <= 3; ++mu) blocks.push_back(assemble(op, {mu, mu, 1, std::nullopt}).M);
    ModelSurface c3 = quadric(2, {1, -1});
    LinearizedOperator oc(c3, shape_quadric(2), c3.ws);
    for (int mu = -2; mu <= 2; ++mu) blocks.push_back(assemble(oc, {mu, mu, 1, std::nullopt}).M);
    std::vector<int> ranks;
    for (const auto& b : blocks) ranks.push_back(rank(b));
    while (tally.out.cases < cases) {
        bool ok;
        if (tally.out.cases % 2 == 0) {
            std::size_t i = std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng);
            const SparseMatrix& b = blocks[i];
            ok = rank(permuted(b, random_perm(b.rows, rng), random_perm(b.cols, rng))) == ranks[i];
        } else {
            SparseMatrix M = random_matrix(g, rng);
            ok = rank(permuted(M, random_perm(M.rows, rng), random_perm(M.cols, rng))) == rank(M);
        }
        tally.record(ok, "rank under basis permutation, case " + std::to_string(tally.out.cases));
    }
    return tally.out;
}

}  // namespace cr
