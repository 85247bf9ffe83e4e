#include "cr/surfaces.hpp"

#include <doctest.h>

using namespace cr;

TEST_SUITE("surfaces") {

TEST_CASE("quadrics and the cubic model") {
    ModelSurface c = quadric(2, {1, -1});
    TablePtr t = c.table();
    CHECK(c.F == make_term(t, 1, {{"z1", 1}, {"z1bar", 1}}) - make_term(t, 1, {{"z2", 1}, {"z2bar", 1}}));
    CHECK_NOTHROW(validate_surface(c));
    ModelSurface q = cubic_q();
    CHECK(q.exact);
    CHECK(is_conj_fixed(q.F));
    CHECK(is_weighted_homogeneous(q.F, q.ws, 3));
    CHECK(hessian3_det(q).is_zero());
}

TEST_CASE("invalid surfaces are rejected") {
    ModelSurface c = quadric(1, {1});
    c.F = c.F + make_term(c.table(), GaussRat::i(), {{"z1", 2}});
    CHECK_THROWS_AS(validate_surface(c), std::invalid_argument);
    ModelSurface d = quadric(1, {1});
    d.F = d.F + make_term(d.table(), 1, {{"u", 2}});
    CHECK_THROWS_AS(validate_surface(d), std::invalid_argument);
}

TEST_CASE("pair forms and forced S-forms") {
    TwoNondegParams p;
    p.pair_id = 1;
    p.k = 2;
    p.m = 3;
    PairForms f = pair_forms(p);
    CHECK(f.K[0][0] == GaussRat(2));
    CHECK(f.K[1][1] == GaussRat(3));
    CHECK_NOTHROW(validate_pair_params(p));
    ModelSurface s = two_nondeg(p);
    CHECK(is_conj_fixed(s.F));
    TwoNondegParams bad;
    bad.pair_id = 10;
    CHECK_THROWS(validate_pair_params(bad));
}

TEST_CASE("surface JSON round trip and hashing") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    for (const ModelSurface& s : {cubic_q(), quadric(3, {1, 1, -1}), three_nondeg_j6({}), two_nondeg({})}) {
        std::string js = surface_json(s);
        ModelSurface r = surface_from_json(js);
        CHECK(r.F == s.F);
        CHECK(surface_json(r) == js);
    }
    CHECK_THROWS(surface_from_json("{\"F\": 3}"));
    CHECK_THROWS(surface_from_json("not json"));
}

}
