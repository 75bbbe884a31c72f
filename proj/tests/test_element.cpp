#include <doctest.h>

#include "weil/element.hpp"

using namespace weil;

TEST_CASE("addition and scaling are coefficient-wise and canonical") {
    SimplicialObject D = make_Dn(1);
    WeilElement x = WeilElement::variable(D, 1);
    CHECK(add(x, x) == scale(rat(2), x));
    CHECK(scale(rat(0), x).is_zero());

    SimplicialObject D2 = make_Dn(2);
    WeilElement x1 = WeilElement::variable(D2, 1);
    WeilElement x2 = WeilElement::variable(D2, 2);
    CHECK(add(add(x1, x2), sub(x1, x2)) == scale(rat(2), x1));

    SimplicialObject other = make_Dn(3);
    CHECK_THROWS_AS(add(x1, WeilElement::variable(other, 1)), mixed_algebra_error);
}

TEST_CASE("multiplication reduces modulo squares and forbidden products") {
    SimplicialObject D = make_Dn(1);
    WeilElement x = WeilElement::variable(D, 1);
    CHECK(mul(x, x).is_zero());

    SimplicialObject D2 = make_Dn(2);
    CHECK(mul(WeilElement::variable(D2, 1), WeilElement::variable(D2, 2)) ==
          WeilElement::monomial(D2, Monomial::of({1, 2})));

    SimplicialObject Dp2 = make_D_paren(2);
    CHECK(mul(WeilElement::variable(Dp2, 1), WeilElement::variable(Dp2, 2)).is_zero());

    // the sum-witness fact: (X1 - X2)(X2 - X3) vanishes when all pairwise
    // products do
    SimplicialObject Dp3 = make_D_paren(3);
    WeilElement a = sub(WeilElement::variable(Dp3, 1), WeilElement::variable(Dp3, 2));
    WeilElement b = sub(WeilElement::variable(Dp3, 2), WeilElement::variable(Dp3, 3));
    CHECK(mul(a, b).is_zero());
}

TEST_CASE("constructor rejects coefficients on disallowed monomials") {
    SimplicialObject Dp2 = make_D_paren(2);
    std::map<Monomial, Rational> coeffs{{Monomial::of({1, 2}), rat(1)}};
    CHECK_THROWS_AS(WeilElement(Dp2, coeffs), error);
}

TEST_CASE("dense round trip follows basis order") {
    SimplicialObject D2 = make_Dn(2);
    WeilElement e = poly(D2, {{3, {}}, {-1, {1}}, {2, {1, 2}}});
    std::vector<Rational> d = e.dense();
    CHECK(d == std::vector<Rational>{rat(3), rat(-1), rat(0), rat(2)});
    CHECK(WeilElement::from_dense(D2, d) == e);
}

TEST_CASE("element printing") {
    SimplicialObject D2 = make_Dn(2);
    CHECK(WeilElement::zero(D2).str() == "0");
    CHECK(WeilElement::unit(D2).str() == "1");
    CHECK(poly(D2, {{1, {1}}, {-1, {2}}}).str() == "d1 - d2");
    CHECK(poly(D2, {{-2, {1, 2}}, {1, {}}}).str() == "1 - 2*d1*d2");
}
