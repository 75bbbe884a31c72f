#pragma once

#include <string>
#include <utility>

#include "weil/element.hpp"
#include "weil/errors.hpp"
#include "weil/infinitesimal_map.hpp"
#include "weil/linalg.hpp"

namespace weil {

/// A linear map W_{domain} -> W_{codomain} between Weil algebras, stored as
/// an exact dense matrix: column j is the image of the j-th basis monomial
/// of W_{domain} in the basis of W_{codomain}.
///
/// Homs arising from infinitesimal maps (induced_hom) are automatically
/// unital and multiplicative; is_unital / is_multiplicative certify that
/// exhaustively for any matrix.
class AlgebraHom {
public:
    AlgebraHom(SimplicialObject domain, SimplicialObject codomain, Matrix m)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(m)) {
        if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
            throw object_mismatch_error("hom matrix is " + std::to_string(matrix_.rows()) + "x" +
                                        std::to_string(matrix_.cols()) + ", expected " +
                                        std::to_string(codomain_.dim()) + "x" +
                                        std::to_string(domain_.dim()));
    }

    /// Algebra the hom maps out of (its Weil algebra, that is).
    const SimplicialObject& domain_object() const { return domain_; }
    const SimplicialObject& codomain_object() const { return codomain_; }
    const Matrix& matrix() const { return matrix_; }

    static AlgebraHom identity(const SimplicialObject& obj) {
        return AlgebraHom(obj, obj, Matrix::identity(obj.dim()));
    }

    WeilElement apply(const WeilElement& gamma) const {
        if (gamma.parent() != domain_)
            throw object_mismatch_error("hom_apply: element of W_" + gamma.parent().str() +
                                        ", hom out of W_" + domain_.str());
        return WeilElement::from_dense(codomain_, matrix_.apply(gamma.dense()));
    }

    bool is_unital() const {
        return apply(WeilElement::unit(domain_)) == WeilElement::unit(codomain_);
    }

    /// H(x*y) == H(x)*H(y) over every pair of basis monomials; the bases in
    /// play are small, so exhaustive is cheap.
    bool is_multiplicative() const {
        const auto& basis = domain_.basis();
        std::vector<WeilElement> images;
        images.reserve(basis.size());
        for (const Monomial& m : basis)
            images.push_back(apply(WeilElement::monomial(domain_, m)));
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i; j < basis.size(); ++j) {
                WeilElement xy = mul(WeilElement::monomial(domain_, basis[i]),
                                     WeilElement::monomial(domain_, basis[j]));
                if (apply(xy) != mul(images[i], images[j])) return false;
            }
        return true;
    }

    bool operator==(const AlgebraHom& o) const {
        return domain_ == o.domain_ && codomain_ == o.codomain_ && matrix_ == o.matrix_;
    }
    bool operator!=(const AlgebraHom& o) const { return !(*this == o); }

private:
    SimplicialObject domain_, codomain_;
    Matrix matrix_;
};

/// The contravariant action on arrows: for f : A -> B, the substitution
/// homomorphism W_B -> W_A. Requires a valid map.
inline AlgebraHom induced_hom(const InfinitesimalMap& f) {
    require_valid(f, "induced_hom(" + f.str() + ")");
    const SimplicialObject& B = f.target();
    const SimplicialObject& A = f.source();
    Matrix M(A.dim(), B.dim());
    const auto& bb = B.basis();
    for (size_t j = 0; j < bb.size(); ++j) {
        WeilElement img = substitute(WeilElement::monomial(B, bb[j]), f);
        for (const auto& [m, c] : img.coefficients()) M(A.basis_index(m), int(j)) = c;
    }
    return AlgebraHom(B, A, std::move(M));
}

/// h1 : W_B -> W_A after h2 : W_C -> W_B, giving W_C -> W_A.
inline AlgebraHom hom_compose(const AlgebraHom& h1, const AlgebraHom& h2) {
    if (h2.codomain_object() != h1.domain_object())
        throw object_mismatch_error("hom_compose: W_" + h2.codomain_object().str() +
                                    " != W_" + h1.domain_object().str());
    return AlgebraHom(h2.domain_object(), h1.codomain_object(), h1.matrix() * h2.matrix());
}

inline bool hom_equal(const AlgebraHom& a, const AlgebraHom& b) { return a == b; }

inline WeilElement hom_apply(const AlgebraHom& h, const WeilElement& gamma) {
    return h.apply(gamma);
}

}  // namespace weil
