#include "cr/fixtures.hpp"
#include "cr/suites.hpp"

#include <doctest.h>

using namespace cr;

TEST_SUITE("properties") {

void require_clean(const PropertyOutcome& o) {
    CHECK(o.cases >= 1000);
    INFO(o.first_failure);
    CHECK(o.failures == 0);
}

TEST_CASE("polynomial ring axioms") {
    for (auto seed : kDefaultSeeds) require_clean(property_ring_axioms(seed, 1000));
}

TEST_CASE("conjugation is an involutive ring automorphism") {
    for (auto seed : kDefaultSeeds) require_clean(property_involution(seed, 1000));
}

TEST_CASE("graded components partition every polynomial") {
    for (auto seed : kDefaultSeeds) require_clean(property_grading_partition(seed, 1000));
}

TEST_CASE("rank plus nullity equals the column count") {
    for (auto seed : kDefaultSeeds) require_clean(property_rank_nullity(seed, 1000));
}

TEST_CASE("dimensions do not depend on basis order") {
    for (auto seed : kDefaultSeeds) require_clean(property_basis_order(seed, 1000));
}

}
