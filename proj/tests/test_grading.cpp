#include "cr/oracle.hpp"
#include "cr/surfaces.hpp"
#include "cr/tangency.hpp"

#include <doctest.h>

using namespace cr;

TEST_SUITE("grading") {

TEST_CASE("preset weight systems") {
    TablePtr t = coordinate_table({"z1", "z2", "zeta"});
    auto w1 = WeightSystem::preset("W1", t), w2 = WeightSystem::preset("W2", t), w3 = WeightSystem::preset("W3", t);
    CHECK(w1.weight("z1") == 1);
    CHECK(w1.weight("w") == 2);
    CHECK(w2.weight("z2") == 2);
    CHECK(w2.weight("zeta") == 1);
    CHECK(w2.weight("u") == 4);
    CHECK(w3.weight("z1") == 2);
    CHECK(w3.weight("zetabar") == 1);
    CHECK(w3.weight("w") == 3);
    CHECK_THROWS(WeightSystem::preset("W9", t));
}

TEST_CASE("graded components split a polynomial") {
    TablePtr t = coordinate_table({"z1", "z2", "zeta"});
    auto ws = WeightSystem::preset("W2", t);
    Poly p = make_term(t, 1, {{"z1", 1}}) + make_term(t, 3, {{"zeta", 2}}) + make_term(t, GaussRat::i(), {{"w", 1}});
    auto parts = graded_components(p, ws);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(2) == make_term(t, 1, {{"z1", 1}}) + make_term(t, 3, {{"zeta", 2}}));
    CHECK(is_weighted_homogeneous(parts.at(4), ws, 4));
    CHECK(weight_range(p, ws) == std::pair<int, int>{2, 4});
}

TEST_CASE("monomial bases match the weighted count") {
    TablePtr t = coordinate_table({"z1", "z2", "zeta"});
    auto ws = WeightSystem::preset("W3", t);
    for (int mu = 0; mu <= 8; ++mu)
        CHECK(static_cast<std::int64_t>(monomial_basis({"z1", "z2", "zeta", "w"}, ws, mu).size()) ==
              monomial_count({2, 1, 1, 3}, mu));
    auto b = monomial_basis({"z1", "zeta"}, WeightSystem::preset("W1", t), 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0][t->index("z1")] == 2);
    CHECK(b[2][t->index("zeta")] == 2);
}

TEST_CASE("jet bases respect offsets and minimum weights") {
    TablePtr t = coordinate_table({"z1"});
    auto ws = WeightSystem::preset("W1", t);
    JetShape sh = shape_quadric(1);
    // weight 0: f = z (weight 1), e = w or z^2 (weight 2)
    CHECK(jet_basis(sh, ws, 0).size() == 3);
    CHECK(jet_basis(sh, ws, -2).size() == 1);
    CHECK(sh.equation_offset() == 2);
}

}
