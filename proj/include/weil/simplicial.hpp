#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "weil/errors.hpp"
#include "weil/monomial.hpp"

namespace weil {

/// A simplicial infinitesimal object: n square-zero coordinates together
/// with a family of index sets whose products vanish. The family is kept
/// normalized as an antichain; redundant generators are silently dropped.
///
/// Values are immutable and cheap to copy (shared internal state); equality
/// is structural on (arity, normalized family).
class SimplicialObject {
public:
    SimplicialObject() : SimplicialObject(1, {}) {}

    SimplicialObject(int arity, std::vector<Monomial> forbidden) {
        if (arity < 1 || arity > Monomial::max_index)
            throw error("arity " + std::to_string(arity) + " outside [1, " +
                        std::to_string(Monomial::max_index) + "]");
        for (const Monomial& f : forbidden) {
            if (f.degree() < 2)
                throw error("forbidden set must have at least 2 elements");
            if (f.max_used_index() > arity)
                throw error("forbidden set index exceeds arity " + std::to_string(arity));
        }
        auto d = std::make_shared<Data>();
        d->arity = arity;
        d->forbidden = normalize(std::move(forbidden));
        d->basis = enumerate_basis(arity, d->forbidden);
        data_ = std::move(d);
    }

    int arity() const { return data_->arity; }
    const std::vector<Monomial>& forbidden() const { return data_->forbidden; }

    /// true iff m contains some forbidden set.
    bool is_forbidden(const Monomial& m) const {
        if (m.max_used_index() > arity())
            throw std::out_of_range("monomial index exceeds arity");
        for (const Monomial& f : forbidden())
            if (f.subset_of(m)) return true;
        return false;
    }

    /// Allowed monomials in (degree, lex) order; deterministic across runs.
    const std::vector<Monomial>& basis() const { return data_->basis; }

    int dim() const { return int(data_->basis.size()); }

    /// Position of an allowed monomial in basis(), or -1.
    int basis_index(const Monomial& m) const {
        const auto& b = data_->basis;
        auto it = std::lower_bound(b.begin(), b.end(), m);
        if (it != b.end() && *it == m) return int(it - b.begin());
        return -1;
    }

    bool operator==(const SimplicialObject& o) const {
        return arity() == o.arity() && forbidden() == o.forbidden();
    }
    bool operator!=(const SimplicialObject& o) const { return !(*this == o); }

    /// e.g. "D^3{(1,3),(2,3)}", "D^2", "D".
    std::string str() const {
        std::string out = "D";
        if (arity() > 1) out += "^" + std::to_string(arity());
        if (!forbidden().empty()) {
            out += "{";
            bool first = true;
            for (const Monomial& f : forbidden()) {
                if (!first) out += ",";
                first = false;
                out += "(";
                bool fi = true;
                for (int i : f.indices()) {
                    if (!fi) out += ",";
                    fi = false;
                    out += std::to_string(i);
                }
                out += ")";
            }
            out += "}";
        }
        return out;
    }

private:
    struct Data {
        int arity = 1;
        std::vector<Monomial> forbidden;
        std::vector<Monomial> basis;
    };

    static std::vector<Monomial> normalize(std::vector<Monomial> fam) {
        std::sort(fam.begin(), fam.end());
        fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
        std::vector<Monomial> out;
        for (const Monomial& f : fam) {
            bool redundant = false;
            for (const Monomial& g : fam)
                if (g != f && g.subset_of(f)) { redundant = true; break; }
            if (!redundant) out.push_back(f);
        }
        return out;
    }

    static std::vector<Monomial> enumerate_basis(int n, const std::vector<Monomial>& forb) {
        std::vector<Monomial> out;
        const uint32_t total = uint32_t(1) << n;
        for (uint32_t mask = 0; mask < total; ++mask) {
            bool bad = false;
            for (const Monomial& f : forb)
                if ((f.bits() & mask) == f.bits()) { bad = true; break; }
            if (!bad) {
                std::vector<int> idx;
                for (int i = 1; i <= n; ++i)
                    if ((mask >> (i - 1)) & 1u) idx.push_back(i);
                out.push_back(Monomial::of(idx));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::shared_ptr<const Data> data_;
};

/// D^n: no relations beyond the squares.
inline SimplicialObject make_Dn(int n) { return SimplicialObject(n, {}); }

/// D(n): every pairwise product vanishes.
inline SimplicialObject make_D_paren(int n) {
    std::vector<Monomial> forb;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) forb.push_back(Monomial::of({i, j}));
    return SimplicialObject(n, std::move(forb));
}

/// Block combination: coordinates of the two blocks are placed side by side
/// and every cross-block product vanishes.
inline SimplicialObject oplus(const SimplicialObject& a, const SimplicialObject& b) {
    const int m = a.arity();
    std::vector<Monomial> forb = a.forbidden();
    for (const Monomial& f : b.forbidden()) {
        Monomial shifted;
        for (int i : f.indices()) shifted = shifted.with(i + m);
        forb.push_back(shifted);
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= b.arity(); ++j)
            forb.push_back(Monomial::of({i, j + m}));
    return SimplicialObject(m + b.arity(), std::move(forb));
}

}  // namespace weil
