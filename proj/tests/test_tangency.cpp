#include "cr/fixtures.hpp"
#include "cr/flows.hpp"

#include <doctest.h>

using namespace cr;

TEST_SUITE("tangency") {

TEST_CASE("known tangent fields of the sphere") {
    ModelSurface s = quadric(1, {1});
    TablePtr t = s.table();
    FieldJet X(shape_quadric(1), t);
    X["e"] = Poly::constant(t, 1);
    CHECK(tangency_residual(s, X).is_zero());
    X["f1"] = make_term(t, GaussRat::i(), {{"z1", 1}});
    CHECK(tangency_residual(s, X).is_zero());
    X["f1"] = Poly::var(t, "z1");
    X["e"] = make_term(t, 2, {{"w", 1}});
    CHECK(tangency_residual(s, X).is_zero());
    X["e"] = Poly::var(t, "w");
    CHECK(!tangency_residual(s, X).is_zero());
}

TEST_CASE("operator normalization") {
    ModelSurface s = quadric(2, {1, 1});
    TablePtr t = s.table();
    LinearizedOperator op(s, shape_quadric(2), s.ws);
    FieldJet X(shape_quadric(2), t);
    X["f1"] = make_term(t, GaussRat(1, 2), {{"z2", 1}, {"w", 1}});
    X["e"] = make_term(t, 3, {{"z1", 2}});
    CHECK(op.apply_full(X, 6) == Poly::constant(t, -2) * tangency_residual(s, X, 6));
}

TEST_CASE("graded fields of Q are tangent") {
    ModelSurface q = cubic_q();
    const GaussRat I = GaussRat::i();
    for (const FieldJet& X : {q_field_m3(q, 1), q_field_m2(q, I), q_field_m1(q, 1, I, 2), q_field_0(q, I, 2, 1),
                              q_field_1(q, GaussRat(1, 2), 3)})
        CHECK(tangency_residual(q, X).is_zero());
}

TEST_CASE("explicit operators agree with the derived operator") {
    J6Params p = generic_j6_params(kDefaultSeeds[0]);
    ModelSurface s = three_nondeg_j6(p);
    LinearizedOperator op(s, shape_j6(), s.ws);
    TablePtr t = s.table();
    FieldJet X(shape_j6(), t);
    X["f"] = make_term(t, GaussRat(1, 2), {{"z", 5}}) + make_term(t, 1, {{"z", 1}, {"w", 2}});
    X["g"] = make_term(t, GaussRat(0, 3), {{"z", 2}, {"zeta", 2}});
    X["h"] = make_term(t, 1, {{"z", 1}, {"zeta", 1}, {"eta", 1}});
    X["e"] = make_term(t, GaussRat(2, -1), {{"z", 6}}) + make_term(t, 1, {{"w", 3}});
    CHECK(explicit_L_j6(X, p) == op.apply(X, 3));
}

TEST_CASE("delta operator") {
    TablePtr t = coordinate_table({"z1"});
    Poly Fj = Poly::var(t, "z1bar");
    Poly psi = make_term(t, 1, {{"u", 3}});
    CHECK(delta_operator(Fj, psi) == make_term(t, GaussRat(0, 3), {{"z1bar", 1}, {"u", 2}}));
}

}
