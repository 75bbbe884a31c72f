#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weil/algebra_hom.hpp"
#include "weil/errors.hpp"
#include "weil/linalg.hpp"

namespace weil {

struct no_mediator_error : error {
    using error::error;
};
struct non_unique_mediator_error : error {
    using error::error;
};

/// A finite diagram of Weil algebras: one algebra per node, arrows are homs
/// between node algebras identified by node indices.
class Diagram {
public:
    struct Arrow {
        int from = 0, to = 0;
        AlgebraHom hom;  // W_{nodes[from]} -> W_{nodes[to]}
    };

    Diagram(std::vector<SimplicialObject> nodes, std::vector<Arrow> arrows)
        : nodes_(std::move(nodes)), arrows_(std::move(arrows)) {
        if (nodes_.empty()) throw malformed_diagram_error("diagram with no nodes");
        for (const Arrow& a : arrows_) {
            if (a.from < 0 || a.from >= int(nodes_.size()) || a.to < 0 ||
                a.to >= int(nodes_.size()))
                throw malformed_diagram_error("arrow endpoint out of range");
            if (a.hom.domain_object() != nodes_[size_t(a.from)] ||
                a.hom.codomain_object() != nodes_[size_t(a.to)])
                throw malformed_diagram_error("arrow hom does not match node algebras");
        }
        offsets_.push_back(0);
        for (const SimplicialObject& o : nodes_) offsets_.push_back(offsets_.back() + o.dim());
    }

    const std::vector<SimplicialObject>& nodes() const { return nodes_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int node_offset(int i) const { return offsets_[size_t(i)]; }
    int product_dim() const { return offsets_.back(); }

private:
    std::vector<SimplicialObject> nodes_;
    std::vector<Arrow> arrows_;
    std::vector<int> offsets_;
};

/// A candidate cone: apex algebra plus legs W_apex -> W_node. Legs may be
/// given for a subset of nodes; the rest are completed by composing along
/// arrows when possible.
struct Cone {
    SimplicialObject apex;
    std::map<int, AlgebraHom> legs;
};

/// Basis of the compatible-tuple subspace of the product of node algebras.
struct LimitSubspace {
    std::vector<std::vector<Rational>> basis;  // flat vectors over the product
    bool closed_under_product = false;
    bool contains_unit = false;

    int dimension() const { return int(basis.size()); }
};

struct LimitReport {
    bool commutes = false;
    int limit_dimension = 0;
    int apex_dimension = 0;
    bool is_limit = false;
    LimitSubspace witness;
    Matrix induced;                  // limit coordinates of each apex basis monomial
    std::vector<int> completed_legs; // node indices whose legs were derived
    std::string diagnostic;
};

namespace detail {

inline std::optional<std::vector<Rational>> coords_in_span(
    const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
    if (basis.empty()) {
        for (const Rational& x : v)
            if (x != 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    Matrix B(int(basis[0].size()), int(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k)
        for (size_t r = 0; r < basis[k].size(); ++r) B(int(r), int(k)) = basis[k][r];
    auto x = solve(B, v);
    if (!x) return std::nullopt;
    // solve() guarantees pivot consistency but not residual when rank-deficient
    std::vector<Rational> check = B.apply(*x);
    if (check != v) return std::nullopt;
    return x;
}

inline std::vector<Rational> pointwise_product(const Diagram& d, const std::vector<Rational>& u,
                                               const std::vector<Rational>& v) {
    std::vector<Rational> out(size_t(d.product_dim()), Rational(0));
    for (size_t i = 0; i < d.nodes().size(); ++i) {
        const SimplicialObject& obj = d.nodes()[i];
        int off = d.node_offset(int(i));
        std::vector<Rational> a(u.begin() + off, u.begin() + off + obj.dim());
        std::vector<Rational> b(v.begin() + off, v.begin() + off + obj.dim());
        WeilElement p = mul(WeilElement::from_dense(obj, a), WeilElement::from_dense(obj, b));
        std::vector<Rational> pd = p.dense();
        for (int r = 0; r < obj.dim(); ++r) out[size_t(off + r)] = pd[size_t(r)];
    }
    return out;
}

}  // namespace detail

/// Solve the compatibility system {for every arrow a : i -> j, a(x_i) = x_j}
/// over the product of the node algebras and certify that the solution space
/// is a unital subalgebra.
inline LimitSubspace compute_limit(const Diagram& d) {
    const int tot = d.product_dim();
    int rows = 0;
    for (const auto& a : d.arrows()) rows += d.nodes()[size_t(a.to)].dim();
    Matrix M(rows, tot);
    int r0 = 0;
    for (const auto& a : d.arrows()) {
        const Matrix& H = a.hom.matrix();
        int of = d.node_offset(a.from), ot = d.node_offset(a.to);
        for (int r = 0; r < H.rows(); ++r) {
            for (int c = 0; c < H.cols(); ++c) M(r0 + r, of + c) = H(r, c);
            M(r0 + r, ot + r) -= 1;
        }
        r0 += H.rows();
    }
    LimitSubspace out;
    out.basis = kernel_basis(std::move(M));

    std::vector<Rational> unit(size_t(tot), Rational(0));
    for (size_t i = 0; i < d.nodes().size(); ++i)
        unit[size_t(d.node_offset(int(i)) +
                    d.nodes()[i].basis_index(Monomial::unit()))] = 1;
    out.contains_unit = detail::coords_in_span(out.basis, unit).has_value();

    out.closed_under_product = true;
    for (size_t i = 0; i < out.basis.size() && out.closed_under_product; ++i)
        for (size_t j = i; j < out.basis.size(); ++j) {
            auto p = detail::pointwise_product(d, out.basis[i], out.basis[j]);
            if (!detail::coords_in_span(out.basis, p)) {
                out.closed_under_product = false;
                break;
            }
        }
    return out;
}

/// Complete a partial cone by pushing known legs along arrows. Throws when a
/// node stays unreachable or a provided leg has the wrong endpoints.
inline std::pair<std::map<int, AlgebraHom>, std::vector<int>> complete_cone(const Diagram& d,
                                                                            const Cone& c) {
    std::map<int, AlgebraHom> legs;
    for (const auto& [i, h] : c.legs) {
        if (i < 0 || i >= int(d.nodes().size()))
            throw shape_mismatch_error("cone leg for node " + std::to_string(i) + " out of range");
        if (h.domain_object() != c.apex)
            throw shape_mismatch_error("cone leg out of W_" + h.domain_object().str() +
                                       ", apex is W_" + c.apex.str());
        if (h.codomain_object() != d.nodes()[size_t(i)])
            throw shape_mismatch_error("cone leg into wrong node algebra");
        legs.emplace(i, h);
    }
    std::vector<int> completed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& a : d.arrows()) {
            if (legs.count(a.from) && !legs.count(a.to)) {
                legs.emplace(a.to, hom_compose(a.hom, legs.at(a.from)));
                completed.push_back(a.to);
                changed = true;
            }
        }
    }
    if (legs.size() != d.nodes().size())
        throw shape_mismatch_error("cone cannot be completed: some node has no leg");
    return {std::move(legs), std::move(completed)};
}

/// Certify (or refute) that a cone exhibits its apex as the limit of the
/// diagram: the legs must commute with every arrow and assemble into a
/// bijection from the apex onto the compatible-tuple subspace.
inline LimitReport is_limit_cone(const Diagram& d, const Cone& c) {
    LimitReport rep;
    auto [legs, completed] = complete_cone(d, c);
    rep.completed_legs = completed;

    rep.commutes = true;
    for (const auto& a : d.arrows()) {
        if (hom_compose(a.hom, legs.at(a.from)) != legs.at(a.to)) {
            rep.commutes = false;
            rep.diagnostic += "arrow " + std::to_string(a.from) + "->" + std::to_string(a.to) +
                              " does not commute with the legs; ";
        }
    }

    rep.witness = compute_limit(d);
    rep.limit_dimension = rep.witness.dimension();
    rep.apex_dimension = c.apex.dim();

    const int tot = d.product_dim();
    Matrix stacked(tot, rep.apex_dimension);
    for (const auto& [i, h] : legs) {
        int off = d.node_offset(i);
        const Matrix& H = h.matrix();
        for (int r = 0; r < H.rows(); ++r)
            for (int cc = 0; cc < H.cols(); ++cc) stacked(off + r, cc) = H(r, cc);
    }
    bool in_span = true;
    rep.induced = Matrix(rep.limit_dimension, rep.apex_dimension);
    for (int cc = 0; cc < rep.apex_dimension && in_span; ++cc) {
        std::vector<Rational> col(static_cast<size_t>(tot));
        for (int r = 0; r < tot; ++r) col[size_t(r)] = stacked(r, cc);
        auto x = detail::coords_in_span(rep.witness.basis, col);
        if (!x) {
            in_span = false;
            rep.diagnostic += "apex image leaves the compatible subspace; ";
            break;
        }
        for (int r = 0; r < rep.limit_dimension; ++r) rep.induced(r, cc) = (*x)[size_t(r)];
    }
    bool bijective = false;
    if (in_span) {
        if (rep.limit_dimension != rep.apex_dimension) {
            rep.diagnostic += "dimension mismatch: limit " + std::to_string(rep.limit_dimension) +
                              " vs apex " + std::to_string(rep.apex_dimension) + "; ";
        } else {
            int r = rank(rep.induced);
            bijective = r == rep.apex_dimension;
            if (!bijective)
                rep.diagnostic += "induced map not a bijection (rank " + std::to_string(r) +
                                  " of " + std::to_string(rep.apex_dimension) + "); ";
        }
    }
    rep.is_limit = rep.commutes && bijective;
    return rep;
}

/// The unique hom h from the other cone's apex algebra into the limit apex
/// algebra with limit_leg_i . h = other_leg_i for every node.
inline AlgebraHom mediator(const Diagram& d, const Cone& limit_cone, const Cone& other_cone) {
    LimitReport lr = is_limit_cone(d, limit_cone);
    if (!lr.is_limit)
        throw non_unique_mediator_error("mediator: the designated cone is not a limit cone");
    auto [llegs, lc] = complete_cone(d, limit_cone);
    auto [olegs, oc] = complete_cone(d, other_cone);
    for (const auto& a : d.arrows())
        if (hom_compose(a.hom, olegs.at(a.from)) != olegs.at(a.to))
            throw no_mediator_error("mediator: the other cone does not commute");

    const int tot = d.product_dim();
    const int la = limit_cone.apex.dim(), oa = other_cone.apex.dim();
    Matrix L(tot, la), O(tot, oa);
    for (const auto& [i, h] : llegs) {
        int off = d.node_offset(i);
        for (int r = 0; r < h.matrix().rows(); ++r)
            for (int cc = 0; cc < h.matrix().cols(); ++cc) L(off + r, cc) = h.matrix()(r, cc);
    }
    for (const auto& [i, h] : olegs) {
        int off = d.node_offset(i);
        for (int r = 0; r < h.matrix().rows(); ++r)
            for (int cc = 0; cc < h.matrix().cols(); ++cc) O(off + r, cc) = h.matrix()(r, cc);
    }
    Matrix H(la, oa);
    for (int cc = 0; cc < oa; ++cc) {
        std::vector<Rational> col(static_cast<size_t>(tot));
        for (int r = 0; r < tot; ++r) col[size_t(r)] = O(r, cc);
        auto x = solve(L, col);
        if (!x) throw no_mediator_error("mediator: no exact solution for a basis column");
        std::vector<Rational> back = L.apply(*x);
        if (back != col) throw no_mediator_error("mediator: residual after solve");
        for (int r = 0; r < la; ++r) H(r, cc) = (*x)[size_t(r)];
    }
    return AlgebraHom(other_cone.apex, limit_cone.apex, std::move(H));
}

}  // namespace weil
