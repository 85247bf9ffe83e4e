#include "cr/classify.hpp"
#include "cr/fixtures.hpp"

#include <doctest.h>

using namespace cr;

TEST_SUITE("classify") {

FormPair forms(GaussRat k11, GaussRat k22, GaussRat k12, int sig2 = 1) {
    return {{{{1, 0}, {0, sig2}}}, {{{k11, k12}, {k12, k22}}}};
}

TEST_CASE("examples") {
    CHECK(classify_pair(forms(1, 2, 0)).id == 1);
    CHECK(classify_pair(forms(1, 1, 0)).id == 2);
    CHECK(classify_pair(forms(1, 1, 0, -1)).id == 5);
    CHECK(classify_pair(forms(1, 0, 0)).id == classify_pair(forms(0, 1, 0)).id);
}

TEST_CASE("normal forms classify to their own class") {
    for (int id = 1; id <= 9; ++id)
        for (auto seed : kDefaultSeeds) {
            FormPair nf = normal_form(generic_pair_params(id, seed));
            CHECK(classify_pair(nf).id == id);
        }
}

TEST_CASE("classes are invariant under the jet group") {
    ParamSampler g(kDefaultSeeds[1]);
    for (int id = 1; id <= 9; ++id) {
        FormPair nf = normal_form(generic_pair_params(id, kDefaultSeeds[0]));
        for (int trial = 0; trial < 10; ++trial) {
            Mat2 C = {{{g.gauss(), g.gauss()}, {g.gauss(), g.gauss()}}};
            if (mat_det(C).is_zero()) continue;
            // C^T H conj(C) = rho H only holds for unitary-like C, so act on H and K directly.
            FormPair moved{mat_mul(mat_mul(mat_transpose(C), nf.H), mat_conj(C)), mat_mul(mat_mul(mat_transpose(C), nf.K), C)};
            CHECK(classify_pair(moved).id == id);
        }
    }
}

TEST_CASE("degenerate input is rejected") {
    CHECK_THROWS_AS(classify_pair(forms(0, 0, 0)), std::invalid_argument);
    FormPair bad{{{{1, 0}, {0, 0}}}, {{{1, 0}, {0, 1}}}};
    CHECK_THROWS_AS(classify_pair(bad), std::invalid_argument);
    FormPair nonherm{{{{1, GaussRat::i()}, {GaussRat::i(), 1}}}, {{{1, 0}, {0, 1}}}};
    CHECK_THROWS_AS(validate_form_pair(nonherm), std::invalid_argument);
}

TEST_CASE("dimension of G0 from the linear system") {
    const int expected[9] = {2, 3, 3, 2, 3, 3, 2, 3, 4};
    for (int id = 1; id <= 9; ++id) {
        CHECK(g0_dim(id) == expected[id - 1]);
        CHECK(g0_dim(normal_form(generic_pair_params(id, kDefaultSeeds[1]))) == expected[id - 1]);
    }
}

TEST_CASE("jet family of the three-nondegenerate normal form") {
    for (auto seed : kDefaultSeeds) {
        ModelSurface s = make_fixture("j6-generic", seed).surface;
        CHECK(jet13_dim_check(s) == 13);
        CHECK(jet13_uniqueness_slice(s) == 0);
    }
}

TEST_CASE("surfaces from pairs") {
    FormPair p = forms(1, 2, 0);
    ModelSurface s = surface_from_pair(p);
    FormPair back = pair_of_surface(s);
    CHECK(back.H == p.H);
    CHECK(back.K == p.K);
}

}
