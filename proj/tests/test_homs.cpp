#include <doctest.h>

#include "weil/algebra_hom.hpp"

using namespace weil;

namespace {
const SimplicialObject D = make_Dn(1);
const SimplicialObject D2 = make_Dn(2);
const SimplicialObject Dp2 = make_D_paren(2);
const SimplicialObject C(3, {Monomial::of({1, 3}), Monomial::of({2, 3})});
const SimplicialObject E(4, {Monomial::of({1, 3}), Monomial::of({2, 3}), Monomial::of({1, 4}),
                             Monomial::of({2, 4}), Monomial::of({3, 4})});
}  // namespace

TEST_CASE("the hom of (d1, d2, d1*d2) sends X3 to X1*X2") {
    InfinitesimalMap psi = make_map(D2, C, {{{1, {1}}}, {{1, {2}}}, {{1, {1, 2}}}});
    AlgebraHom W = induced_hom(psi);
    CHECK(W.domain_object() == C);
    CHECK(W.codomain_object() == D2);
    CHECK(W.apply(WeilElement::variable(C, 3)) == WeilElement::monomial(D2, Monomial::of({1, 2})));
    CHECK(W.apply(WeilElement::zero(C)).is_zero());
}

TEST_CASE("the hom of the D(2) inclusion kills X1*X2 and keeps X1") {
    InfinitesimalMap inc = make_map(Dp2, D2, {{{1, {1}}}, {{1, {2}}}});
    AlgebraHom W = induced_hom(inc);
    CHECK(W.apply(WeilElement::monomial(D2, Monomial::of({1, 2}))).is_zero());
    CHECK(W.apply(WeilElement::variable(D2, 1)) == WeilElement::variable(Dp2, 1));
}

TEST_CASE("identity map induces the identity matrix") {
    AlgebraHom W = induced_hom(identity_map(E));
    CHECK(W == AlgebraHom::identity(E));
}

TEST_CASE("induced homs are unital and multiplicative") {
    InfinitesimalMap psi = make_map(D2, C, {{{1, {1}}}, {{1, {2}}}, {{1, {1, 2}}}});
    AlgebraHom W = induced_hom(psi);
    CHECK(W.is_unital());
    CHECK(W.is_multiplicative());

    // a hand-made non-multiplicative matrix is caught
    Matrix M = Matrix::identity(D2.dim());
    M(0, 3) = 1;  // sends X1*X2 to 1 + X1*X2
    AlgebraHom bad(D2, D2, M);
    CHECK(bad.is_unital());
    CHECK_FALSE(bad.is_multiplicative());
}

TEST_CASE("composite homs are homs of composite maps, contravariantly") {
    InfinitesimalMap into_C = make_map(D, C, {{}, {}, {{1, {1}}}});
    InfinitesimalMap C_to_E = make_map(C, E, {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {}});
    AlgebraHom lhs = hom_compose(induced_hom(into_C), induced_hom(C_to_E));
    AlgebraHom rhs = induced_hom(compose_maps(into_C, C_to_E));
    CHECK(hom_equal(lhs, rhs));
    // and the composite is W of d -> (0,0,d,0)
    CHECK(rhs == induced_hom(make_map(D, E, {{}, {}, {{1, {1}}}, {}})));

    CHECK_THROWS_AS(hom_compose(induced_hom(C_to_E), induced_hom(into_C)),
                    object_mismatch_error);
}

TEST_CASE("induced_hom refuses invalid maps") {
    InfinitesimalMap bad(D2, D, {poly(D2, {{1, {1}}, {1, {2}}})});
    CHECK_THROWS_AS(induced_hom(bad), invalid_map_error);
}

TEST_CASE("hom application respects algebra membership") {
    AlgebraHom W = induced_hom(make_map(Dp2, D2, {{{1, {1}}}, {{1, {2}}}}));
    CHECK_THROWS_AS(W.apply(WeilElement::variable(Dp2, 1)), object_mismatch_error);
}
