#include "cr/fixtures.hpp"
#include "cr/kernel.hpp"
#include "cr/oracle.hpp"

#include <doctest.h>

using namespace cr;

TEST_SUITE("oracles") {

TEST_CASE("weighted monomial counts") {
    CHECK(monomial_count({1}, 5) == 1);
    CHECK(monomial_count({1, 1, 1}, 4) == 15);
    CHECK(monomial_count({1, 2}, 5) == 3);
    CHECK(monomial_count({2, 3}, 1) == 0);
    CHECK(monomial_count({1, 1, 2}, 0) == 1);
}

TEST_CASE("quadric profiles agree with the modular ansatz") {
    for (const auto& sig : std::vector<std::vector<int>>{{1}, {1, 1}, {1, -1}, {1, 1, 1}, {1, 1, -1}}) {
        int n = static_cast<int>(sig.size());
        ModelSurface s = quadric(n, sig);
        LinearizedOperator op(s, shape_quadric(n), s.ws);
        auto exact = graded_profile(op, -2, 3).dims;
        CHECK(exact == quadric_ansatz_profile(sig, -2, 3));
    }
}

TEST_CASE("quadric automorphism dimensions") {
    const std::vector<std::pair<std::vector<int>, int>> cases = {
        {{1}, 8}, {{1, 1}, 15}, {{1, -1}, 15}, {{1, 1, 1}, 24}, {{1, 1, -1}, 24}};
    for (const auto& [sig, dim] : cases) {
        int n = static_cast<int>(sig.size());
        ModelSurface s = quadric(n, sig);
        LinearizedOperator op(s, shape_quadric(n), s.ws);
        CHECK(graded_profile(op, -2, 4).total() == dim);
        CHECK((n + 2) * (n + 2) - 1 == dim);
    }
}

TEST_CASE("S-forms agree with the Hessian condition") {
    TablePtr t = coordinate_table({"z1", "z2", "zeta"});
    for (int id = 1; id <= 9; ++id)
        for (auto seed : kDefaultSeeds) {
            TwoNondegParams p = generic_pair_params(id, seed);
            CHECK(forced_s_form(p, t) == s_form_from_hessian(p, t));
        }
}

}
