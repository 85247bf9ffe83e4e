#include "cr/linalg.hpp"
#include "cr/poly.hpp"

#include <doctest.h>

using namespace cr;

TEST_SUITE("algebra") {

TEST_CASE("Gaussian rationals") {
    GaussRat a(Rat(1, 2), Rat(-3)), b(2, Rat(1, 3));
    CHECK(a + b == GaussRat(Rat(5, 2), Rat(-8, 3)));
    CHECK(a * b == GaussRat(Rat(2), Rat(-35, 6)));
    CHECK(a / b * b == a);
    CHECK(a * a.inverse() == GaussRat(1));
    CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
    CHECK(a.conj().conj() == a);
    CHECK(a.norm() == Rat(37, 4));
    CHECK(a.str() == "(1/2,-3)");
    CHECK(GaussRat::parse("1/2", "-3") == a);
    CHECK_THROWS(GaussRat(0).inverse());
}

TEST_CASE("rational parsing") {
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(rat_str(Rat(-3, 2)) == "-3/2");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic and conjugation") {
    TablePtr t = VarTable::make({"z", "w"}, {"u"});
    Poly z = Poly::var(t, "z"), zb = Poly::var(t, "zbar"), u = Poly::var(t, "u");
    Poly p = z * zb + GaussRat::i() * z * z;
    CHECK(conj(p) == z * zb - GaussRat::i() * zb * zb);
    CHECK(is_conj_fixed(z * zb + u));
    CHECK(!is_conj_fixed(p));
    CHECK(re2(p) == Poly::constant(t, 2) * z * zb + GaussRat::i() * (z * z - zb * zb));
    CHECK(diff(p, "z") == zb + GaussRat(0, 2) * z);
    CHECK(diff(p, "zbar") == z);
    CHECK((p - p).is_zero());
    CHECK(power(z + u, 3) == z * z * z + Poly::constant(t, 3) * z * z * u + Poly::constant(t, 3) * z * u * u + u * u * u);
    CHECK(substitute(p, "z", u) == u * zb + GaussRat::i() * u * u);
    CHECK(max_degree(p, t->index("z")) == 2);
    CHECK(coefficient_of(p, t->index("z"), 1) == zb);
    CHECK(p.str() == Poly(p).str());
}

TEST_CASE("series inverse and truncation") {
    TablePtr t = VarTable::make({"z"}, {});
    TruncationSpec tr{{1, 1}, 6};
    Poly den = Poly::constant(t, 1) + make_term(t, 2, {{"z", 1}});
    Poly inv = series_inverse(den, tr);
    CHECK(mul(den, inv, tr) == Poly::constant(t, 1));
    CHECK(inv.coeff(make_term(t, 1, {{"z", 6}}).terms().begin()->first) == GaussRat(64));
    CHECK(truncate(power(den, 8), tr).size() == 7);
}

TEST_CASE("evaluation on the real locus") {
    TablePtr t = VarTable::make({"z"}, {"u"});
    Poly p = Poly::var(t, "z") * Poly::var(t, "zbar") + Poly::var(t, "u");
    CHECK(eval(p, {{"z", GaussRat(1, 2)}, {"zbar", GaussRat(1, -2)}, {"u", 3}}, true) == GaussRat(8));
    CHECK_THROWS(eval(p, {{"z", GaussRat(1, 2)}, {"zbar", GaussRat(1, 2)}, {"u", 3}}, true));
}

TEST_CASE("exact rank and kernel") {
    SparseMatrix M(3, 4);
    M.push(0, 0, 1), M.push(0, 1, 2), M.push(0, 3, Rat(1, 3));
    M.push(1, 1, 1), M.push(1, 2, -1);
    M.push(2, 0, 2), M.push(2, 1, 5), M.push(2, 2, -1), M.push(2, 3, Rat(2, 3));
    RowEchelon E = echelon(M);
    CHECK(E.rank() == 2);
    auto K = E.kernel();
    REQUIRE(K.size() == 2);
    for (const auto& v : K)
        for (const auto& y : M.apply(v)) CHECK(sgn(y) == 0);
    CHECK(rank(SparseMatrix(0, 5)) == 0);
}

}
