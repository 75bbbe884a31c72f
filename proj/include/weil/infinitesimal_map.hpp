#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weil/element.hpp"
#include "weil/errors.hpp"
#include "weil/simplicial.hpp"

namespace weil {

/// Outcome of validate_map: either ok, or the list of violated relations,
/// each naming the coordinate or forbidden set that fails.
struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    std::string summary() const {
        if (ok) return "ok";
        std::string out;
        for (const auto& v : violations) {
            if (!out.empty()) out += "; ";
            out += v;
        }
        return out;
    }
};

/// A polynomial map between simplicial objects, given by one component per
/// target coordinate. Components live in the source's Weil algebra and must
/// have zero constant term (infinitesimal objects are pointed at 0).
///
/// Construction checks arities only; algebraic validity (nilpotency of each
/// component, vanishing of the target's forbidden products) is the job of
/// validate_map / require_valid.
class InfinitesimalMap {
public:
    InfinitesimalMap(SimplicialObject source, SimplicialObject target,
                     std::vector<WeilElement> components)
        : source_(std::move(source)), target_(std::move(target)),
          components_(std::move(components)) {
        if (int(components_.size()) != target_.arity())
            throw object_mismatch_error(
                "map has " + std::to_string(components_.size()) + " components but target " +
                target_.str() + " has arity " + std::to_string(target_.arity()));
        for (const WeilElement& c : components_)
            if (c.parent() != source_)
                throw mixed_algebra_error("component not an element of W_" + source_.str());
    }

    const SimplicialObject& source() const { return source_; }
    const SimplicialObject& target() const { return target_; }
    const std::vector<WeilElement>& components() const { return components_; }
    const WeilElement& component(int j) const { return components_.at(size_t(j - 1)); }

    bool operator==(const InfinitesimalMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && components_ == o.components_;
    }
    bool operator!=(const InfinitesimalMap& o) const { return !(*this == o); }

    bool is_zero_map() const {
        for (const WeilElement& c : components_)
            if (!c.is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::string out = "(";
        for (size_t i = 0; i < components_.size(); ++i) {
            if (i) out += ", ";
            out += components_[i].str();
        }
        return out + ")";
    }

private:
    SimplicialObject source_, target_;
    std::vector<WeilElement> components_;
};

inline ValidationReport validate_map(const InfinitesimalMap& f) {
    ValidationReport rep;
    const auto& comps = f.components();
    for (size_t j = 0; j < comps.size(); ++j) {
        if (comps[j].constant_term() != 0) {
            rep.ok = false;
            rep.violations.push_back("coordinate " + std::to_string(j + 1) +
                                     " has nonzero constant term");
        }
        WeilElement sq = mul(comps[j], comps[j]);
        if (!sq.is_zero()) {
            rep.ok = false;
            rep.violations.push_back("coordinate " + std::to_string(j + 1) + " fails nilpotency: (" +
                                     comps[j].str() + ")^2 = " + sq.str());
        }
    }
    for (const Monomial& forb : f.target().forbidden()) {
        WeilElement p = WeilElement::unit(f.source());
        for (int j : forb.indices()) p = mul(p, f.component(j));
        if (!p.is_zero()) {
            rep.ok = false;
            rep.violations.push_back("forbidden set " + forb.str() + " has nonzero product " +
                                     p.str());
        }
    }
    return rep;
}

inline void require_valid(const InfinitesimalMap& f, const std::string& name = "map") {
    ValidationReport rep = validate_map(f);
    if (!rep.ok) throw invalid_map_error(name + " invalid: " + rep.summary());
}

inline InfinitesimalMap identity_map(const SimplicialObject& obj) {
    std::vector<WeilElement> comps;
    for (int i = 1; i <= obj.arity(); ++i) comps.push_back(WeilElement::variable(obj, i));
    return InfinitesimalMap(obj, obj, std::move(comps));
}

inline InfinitesimalMap zero_map(const SimplicialObject& src, const SimplicialObject& tgt) {
    return InfinitesimalMap(src, tgt,
                            std::vector<WeilElement>(size_t(tgt.arity()), WeilElement::zero(src)));
}

/// Substitute f's components into one element of W_{f.target}.
inline WeilElement substitute(const WeilElement& gamma, const InfinitesimalMap& f) {
    if (gamma.parent() != f.target())
        throw object_mismatch_error("substitute: element not in W_" + f.target().str());
    WeilElement out = WeilElement::zero(f.source());
    for (const auto& [m, c] : gamma.coefficients()) {
        WeilElement p = WeilElement::monomial(f.source(), Monomial::unit(), c);
        for (int j : m.indices()) p = mul(p, f.component(j));
        out = add(out, p);
    }
    return out;
}

/// f : A -> B then g : B -> C, yielding A -> C.
inline InfinitesimalMap compose_maps(const InfinitesimalMap& f, const InfinitesimalMap& g) {
    if (f.target() != g.source())
        throw object_mismatch_error("compose: " + f.target().str() + " != " + g.source().str());
    std::vector<WeilElement> comps;
    for (const WeilElement& c : g.components()) comps.push_back(substitute(c, f));
    return InfinitesimalMap(f.source(), g.target(), std::move(comps));
}

/// The i-th block inclusion (1-based) into the oplus of the given objects:
/// identities on block i, zero elsewhere.
inline InfinitesimalMap block_inclusion(const std::vector<SimplicialObject>& objs, int i) {
    if (i < 1 || i > int(objs.size())) throw std::out_of_range("block index");
    SimplicialObject big = objs[0];
    for (size_t k = 1; k < objs.size(); ++k) big = oplus(big, objs[k]);
    const SimplicialObject& src = objs[size_t(i - 1)];
    int offset = 0;
    for (int k = 0; k < i - 1; ++k) offset += objs[size_t(k)].arity();
    std::vector<WeilElement> comps(size_t(big.arity()), WeilElement::zero(src));
    for (int j = 1; j <= src.arity(); ++j)
        comps[size_t(offset + j - 1)] = WeilElement::variable(src, j);
    return InfinitesimalMap(src, big, std::move(comps));
}

/// The unique map off the oplus of the sources whose restriction to each
/// block is the given map: components are the blockwise sums with shifted
/// variables. All inputs must share one target.
inline InfinitesimalMap oplus_maps(const std::vector<InfinitesimalMap>& fs) {
    if (fs.empty()) throw error("oplus_maps: empty list");
    const SimplicialObject& tgt = fs[0].target();
    for (const InfinitesimalMap& f : fs)
        if (f.target() != tgt)
            throw object_mismatch_error("oplus_maps target mismatch: " + f.target().str() +
                                        " != " + tgt.str());
    SimplicialObject big = fs[0].source();
    for (size_t k = 1; k < fs.size(); ++k) big = oplus(big, fs[k].source());
    std::vector<WeilElement> comps(size_t(tgt.arity()), WeilElement::zero(big));
    int offset = 0;
    for (const InfinitesimalMap& f : fs) {
        for (int j = 1; j <= tgt.arity(); ++j) {
            WeilElement shifted = WeilElement::zero(big);
            for (const auto& [m, c] : f.component(j).coefficients()) {
                Monomial sh;
                for (int x : m.indices()) sh = sh.with(x + offset);
                shifted = add(shifted, WeilElement::monomial(big, sh, c));
            }
            comps[size_t(j - 1)] = add(comps[size_t(j - 1)], shifted);
        }
        offset += f.source().arity();
    }
    return InfinitesimalMap(big, tgt, std::move(comps));
}

/// Convenience builder over component term lists, same shape as poly().
inline InfinitesimalMap make_map(
    const SimplicialObject& src, const SimplicialObject& tgt,
    std::initializer_list<std::initializer_list<std::pair<long, std::vector<int>>>> comps) {
    std::vector<WeilElement> cs;
    for (const auto& terms : comps) cs.push_back(poly(src, terms));
    return InfinitesimalMap(src, tgt, std::move(cs));
}

}  // namespace weil
