// Seeded randomized law checks: multiplication laws in the Weil algebras,
// oplus laws on objects, contravariant functoriality of induced homs, and
// re-ordering invariance of the limit verdicts.

#include <doctest.h>

#include <optional>
#include <random>

#include "weil/algebra_hom.hpp"
#include "weil/limits.hpp"

using namespace weil;

namespace {

struct Gen {
    std::mt19937_64 eng{0xC0FFEEull};

    int upto(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }

    Rational coeff() { return rat(upto(-2, 2)); }

    SimplicialObject object(int max_arity) {
        int n = upto(1, max_arity);
        std::vector<Monomial> forb;
        int extra = upto(0, n >= 2 ? 3 : 0);
        for (int k = 0; k < extra; ++k) {
            int i = upto(1, n), j = upto(1, n);
            if (i == j) continue;
            forb.push_back(Monomial::of({std::min(i, j), std::max(i, j)}));
        }
        return SimplicialObject(n, forb);
    }

    WeilElement element(const SimplicialObject& obj) {
        WeilElement e = WeilElement::zero(obj);
        for (const Monomial& m : obj.basis())
            if (upto(0, 2) == 0) e = add(e, WeilElement::monomial(obj, m, coeff()));
        return e;
    }

    // a random component with zero constant term and degree <= 3
    WeilElement component(const SimplicialObject& src) {
        WeilElement e = WeilElement::zero(src);
        for (const Monomial& m : src.basis()) {
            if (m.is_unit() || m.degree() > 3) continue;
            if (upto(0, 3) == 0) e = add(e, WeilElement::monomial(src, m, coeff()));
        }
        return e;
    }

    // rejection-sample a valid map; cheap because the objects are tiny
    std::optional<InfinitesimalMap> valid_map(const SimplicialObject& src,
                                              const SimplicialObject& tgt, int tries = 60) {
        for (int k = 0; k < tries; ++k) {
            std::vector<WeilElement> comps;
            for (int j = 0; j < tgt.arity(); ++j) comps.push_back(component(src));
            InfinitesimalMap f(src, tgt, std::move(comps));
            if (validate_map(f).ok) return f;
        }
        return std::nullopt;
    }
};

}  // namespace

TEST_CASE("multiplication is commutative, associative, bilinear and unital") {
    Gen gen;
    int done = 0;
    while (done < 60) {
        SimplicialObject obj = gen.object(4);
        WeilElement a = gen.element(obj), b = gen.element(obj), c = gen.element(obj);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
        Rational q = gen.coeff();
        CHECK(mul(scale(q, a), b) == scale(q, mul(a, b)));
        CHECK(mul(WeilElement::unit(obj), a) == a);
        ++done;
    }
}

TEST_CASE("every positive-degree basis monomial squares to zero") {
    Gen gen;
    for (int k = 0; k < 40; ++k) {
        SimplicialObject obj = gen.object(5);
        for (const Monomial& m : obj.basis()) {
            if (m.is_unit()) continue;
            WeilElement e = WeilElement::monomial(obj, m);
            CHECK(mul(e, e).is_zero());
        }
    }
}

TEST_CASE("oplus laws on random objects") {
    Gen gen;
    for (int k = 0; k < 110; ++k) {
        SimplicialObject a = gen.object(3), b = gen.object(3), c = gen.object(2);
        CHECK(oplus(a, b).dim() == a.dim() + b.dim() - 1);
        CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
    }
}

TEST_CASE("contravariant functoriality on random composable pairs") {
    Gen gen;
    int done = 0;
    while (done < 210) {
        SimplicialObject A = gen.object(3), B = gen.object(3), Cc = gen.object(3);
        auto f = gen.valid_map(A, B);
        auto g = gen.valid_map(B, Cc);
        if (!f || !g) continue;
        AlgebraHom lhs = induced_hom(compose_maps(*f, *g));
        AlgebraHom rhs = hom_compose(induced_hom(*f), induced_hom(*g));
        CHECK(hom_equal(lhs, rhs));
        ++done;
    }
}

TEST_CASE("induced homs of random valid maps are unital and multiplicative") {
    Gen gen;
    int done = 0;
    while (done < 60) {
        SimplicialObject A = gen.object(3), B = gen.object(3);
        auto f = gen.valid_map(A, B);
        if (!f) continue;
        AlgebraHom h = induced_hom(*f);
        CHECK(h.is_unital());
        CHECK(h.is_multiplicative());
        ++done;
    }
}

TEST_CASE("identity map induces the identity hom on random objects") {
    Gen gen;
    for (int k = 0; k < 25; ++k) {
        SimplicialObject obj = gen.object(4);
        CHECK(induced_hom(identity_map(obj)) == AlgebraHom::identity(obj));
    }
}

TEST_CASE("antichain normalization is invisible to is_forbidden") {
    Gen gen;
    for (int k = 0; k < 60; ++k) {
        int n = gen.upto(2, 5);
        std::vector<Monomial> fam, redundant;
        for (int t = 0; t < gen.upto(1, 4); ++t) {
            int i = gen.upto(1, n), j = gen.upto(1, n);
            if (i == j) continue;
            Monomial pair = Monomial::of({std::min(i, j), std::max(i, j)});
            fam.push_back(pair);
            redundant.push_back(pair);
            int extra = gen.upto(1, n);
            if (!pair.contains(extra)) redundant.push_back(pair.with(extra));  // superset
        }
        if (fam.empty()) continue;
        SimplicialObject lean(n, fam), fat(n, redundant);
        CHECK(lean == fat);
        CHECK(lean.basis() == fat.basis());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> idx;
            for (int i = 1; i <= n; ++i)
                if ((mask >> (i - 1)) & 1u) idx.push_back(i);
            Monomial m = Monomial::of(idx);
            CHECK(lean.is_forbidden(m) == fat.is_forbidden(m));
        }
    }
}
