#include "cr/fixtures.hpp"
#include "cr/flows.hpp"

#include <doctest.h>

using namespace cr;

TEST_SUITE("flows") {

TEST_CASE("shears and translations are automorphisms") {
    ModelSurface q = cubic_q();
    CHECK(verify_exact_automorphism(q, shear_z1(q, Rat(2, 3))));
    CHECK(verify_exact_automorphism(q, shear_z2(q, Rat(-5))));
    ModelSurface c = cubic_q_permuted();
    ParamSampler g(kDefaultSeeds[0]);
    for (int k = 0; k < 3; ++k) CHECK(verify_exact_automorphism(c, q_translation(c, g.gauss(), g.gauss(), g.gauss(), g.rat())));
    CHECK(verify_exact_automorphism(c, compose(q_translation(c, 1, 0, GaussRat::i(), 0), q_translation(c, 0, 2, 0, 1))));
}

TEST_CASE("the weight-one flow needs its w-terms") {
    ModelSurface q = cubic_q();
    CHECK(verify_exact_automorphism(q, g1_flow(q, GaussRat(1, -2), Rat(1, 5))));
    CHECK(!verify_exact_automorphism(q, g1_flow_without_w_terms(q, 1, Rat(1, 3))));
}

TEST_CASE("a map that is not an automorphism") {
    ModelSurface q = cubic_q();
    RationalMap m(q.table());
    m.set("z1", make_term(q.table(), 2, {{"z1", 1}}));
    CHECK(!verify_exact_automorphism(q, m));
    CHECK(!automorphism_defect(q, m).is_zero());
    RationalMap bad(q.table());
    bad.set("z1", Poly::var(q.table(), "z1"), Poly::var(q.table(), "z2"));
    CHECK_THROWS(validate_map(bad));
}

TEST_CASE("formal flows") {
    ModelSurface q = cubic_q();
    CHECK(exponentiate_check(q, q_field_0(q, GaussRat(2), 0, 1), g0_flow_series(q, 1, 0, 0, 4)));
    Rat l(1, 2), mu(3);
    GaussRat m(1, 1);
    CHECK(exponentiate_check(q, q_field_0(q, GaussRat(2 * l - mu / 3), m, l), g0_flow_series(q, l, mu, m, 4)));
    FieldJet X = q_field_m1(q, GaussRat(0, 1), 1, 2);
    FormalFlow f = lie_series_flow(q, X, 4);
    CHECK(exponentiate_check(q, X, f));
    CHECK(formal_flow_defect(q, f).is_zero());
    FieldJet Y(shape_q(), q.table());
    Y["f"] = Poly::var(q.table(), "z1");
    CHECK_THROWS(exponentiate_check(q, Y, lie_series_flow(q, Y, 3)));
}

TEST_CASE("exponential series") {
    TablePtr t = flow_table(cubic_q());
    Poly e = exp_series(t, 2, 3);
    Poly tt = Poly::var(t, "t");
    CHECK(e == Poly::constant(t, 1) + Poly::constant(t, 2) * tt + Poly::constant(t, 2) * tt * tt +
                   Poly::constant(t, GaussRat(Rat(4, 3))) * tt * tt * tt);
}

TEST_CASE("the pair-9 family on the special surface") {
    for (const char* name : {"pair9-special", "pair9-special-r3"}) {
        Fixture f = make_fixture(name);
        Space sp = make_space(f, "V5tilde");
        LinearizedOperator op(f.surface, sp.shape, sp.ws);
        GaussRat r = std::string(name) == "pair9-special" ? GaussRat(Rat(1, 2)) : GaussRat(3);
        CHECK(verify_solution(op, pair9_family(f.surface, r, GaussRat(1, 2), GaussRat(-1, 1), 10), sp.window));
        CHECK(verify_solution(op, pair9_extra_direction(f.surface, r, 1, 10), sp.window));
    }
}

}
