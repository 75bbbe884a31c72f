#include <doctest.h>

#include "weil/infinitesimal_map.hpp"

using namespace weil;

namespace {
const SimplicialObject D = make_Dn(1);
const SimplicialObject D2 = make_Dn(2);
const SimplicialObject D3 = make_Dn(3);
const SimplicialObject Dp2 = make_D_paren(2);
const SimplicialObject C(3, {Monomial::of({1, 3}), Monomial::of({2, 3})});
const SimplicialObject E(4, {Monomial::of({1, 3}), Monomial::of({2, 3}), Monomial::of({1, 4}),
                             Monomial::of({2, 4}), Monomial::of({3, 4})});
}  // namespace

TEST_CASE("validate accepts the (d1, d2, d1*d2) map into C") {
    InfinitesimalMap psi = make_map(D2, C, {{{1, {1}}}, {{1, {2}}}, {{1, {1, 2}}}});
    CHECK(validate_map(psi).ok);
}

TEST_CASE("validate rejects d1+d2 into D but accepts it off D(2)") {
    InfinitesimalMap bad(D2, D, {poly(D2, {{1, {1}}, {1, {2}}})});
    ValidationReport rep = validate_map(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.summary().find("nilpotency") != std::string::npos);

    InfinitesimalMap good(Dp2, D, {poly(Dp2, {{1, {1}}, {1, {2}}})});
    CHECK(validate_map(good).ok);
    // and that is exactly the oplus of two identities
    CHECK(good == oplus_maps({identity_map(D), identity_map(D)}));
}

TEST_CASE("validate accepts (d1, d2, d1*d2 - d3, d3) out of C") {
    InfinitesimalMap m =
        make_map(C, E, {{{1, {1}}}, {{1, {2}}}, {{1, {1, 2}}, {-1, {3}}}, {{1, {3}}}});
    CHECK(validate_map(m).ok);
}

TEST_CASE("validate names the violated relation") {
    // (d1, d2, d1) into C violates both (1,3) and (2,3)... no: c1*c3 = d1^2 = 0.
    // Use (d1, d2, d2) instead: c2*c3 = d2^2 = 0 too. (d1, d2, d1+d2) fails
    // nilpotency on nothing but (1,3): c1*c3 = d1*d2 != 0? c3^2 = 2 d1 d2 != 0.
    InfinitesimalMap m = make_map(D2, C, {{{1, {1}}}, {{1, {2}}}, {{1, {1}}, {1, {2}}}});
    ValidationReport rep = validate_map(m);
    CHECK_FALSE(rep.ok);
    CHECK(rep.summary().find("coordinate 3") != std::string::npos);

    InfinitesimalMap constant(D, D, {poly(D, {{1, {}}})});
    CHECK(validate_map(constant).summary().find("constant term") != std::string::npos);
}

TEST_CASE("composition is substitution") {
    InfinitesimalMap phi13 = make_map(D3, SimplicialObject(4, {Monomial::of({2, 4}),
                                                               Monomial::of({3, 4})}),
                                      {{{1, {1}}}, {{1, {2}}}, {{1, {3}}}, {}});
    CHECK(compose_maps(identity_map(D3), phi13) == phi13);
    CHECK(compose_maps(phi13, identity_map(phi13.target())) == phi13);

    InfinitesimalMap into_C = make_map(D, C, {{}, {}, {{1, {1}}}});
    InfinitesimalMap C_to_E =
        make_map(C, E, {{{1, {1}}}, {{1, {2}}}, {{1, {1, 2}}, {-1, {3}}}, {{1, {3}}}});
    InfinitesimalMap got = compose_maps(into_C, C_to_E);
    CHECK(got == make_map(D, E, {{}, {}, {{-1, {1}}}, {{1, {1}}}}));

    CHECK_THROWS_AS(compose_maps(C_to_E, into_C), object_mismatch_error);
}

TEST_CASE("block inclusions restrict oplus_maps to its summands") {
    InfinitesimalMap f = make_map(D, Dp2, {{{1, {1}}}, {}});
    InfinitesimalMap g = make_map(D, Dp2, {{}, {{1, {1}}}});
    InfinitesimalMap both = oplus_maps({f, g});
    CHECK(both.source() == Dp2);  // D (+) D

    CHECK(block_inclusion({D, D}, 1) == make_map(D, Dp2, {{{1, {1}}}, {}}));
    CHECK(compose_maps(block_inclusion({D, D}, 1), both) == f);
    CHECK(compose_maps(block_inclusion({D, D}, 2), both) == g);

    CHECK(block_inclusion({D3, D3}, 2).component(4) == WeilElement::variable(D3, 1));
    CHECK(oplus_maps({f}) == f);
    CHECK_THROWS_AS(oplus_maps({f, identity_map(D)}), object_mismatch_error);
}

TEST_CASE("oplus of valid maps stays valid") {
    InfinitesimalMap l2 = make_map(D2, E, {{{1, {1}}}, {{1, {2}}}, {{1, {1, 2}}}, {}});
    InfinitesimalMap l3 = make_map(D2, E, {{{1, {1}}}, {{1, {2}}}, {}, {{1, {1, 2}}}});
    InfinitesimalMap both = oplus_maps({l2, l3});
    CHECK(validate_map(both).ok);
    CHECK(both.source().arity() == 4);
    CHECK(both.component(1) == add(WeilElement::variable(both.source(), 1),
                                   WeilElement::variable(both.source(), 3)));
}

TEST_CASE("construction rejects wrong component counts and parents") {
    CHECK_THROWS_AS(InfinitesimalMap(D, D2, {WeilElement::variable(D, 1)}),
                    object_mismatch_error);
    CHECK_THROWS_AS(InfinitesimalMap(D2, D, {WeilElement::variable(D, 1)}),
                    mixed_algebra_error);
}

TEST_CASE("k-ary forbidden sets constrain maps too") {
    SimplicialObject T(3, {Monomial::of({1, 2, 3})});
    CHECK(T.dim() == 7);
    // the identity coordinates of D^3 do not satisfy d1*d2*d3 = 0
    InfinitesimalMap bad(D3, T,
                         {WeilElement::variable(D3, 1), WeilElement::variable(D3, 2),
                          WeilElement::variable(D3, 3)});
    ValidationReport rep = validate_map(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.summary().find("forbidden set d1*d2*d3") != std::string::npos);
    // but they do out of C, where d1*d3 already vanishes
    InfinitesimalMap good(C, T,
                          {WeilElement::variable(C, 1), WeilElement::variable(C, 2),
                           WeilElement::variable(C, 3)});
    CHECK(validate_map(good).ok);
}

TEST_CASE("pairwise forbidden-set violations are named") {
    InfinitesimalMap m(D2, Dp2, {WeilElement::variable(D2, 1), WeilElement::variable(D2, 2)});
    ValidationReport rep = validate_map(m);
    CHECK_FALSE(rep.ok);
    CHECK(rep.summary().find("forbidden set d1*d2") != std::string::npos);
}
