#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weil/errors.hpp"
#include "weil/rational.hpp"
#include "weil/simplicial.hpp"

namespace weil {

/// An element of the Weil algebra of a simplicial object: an exact-rational
/// coefficient vector over the square-free monomial basis. Canonical form:
/// no zero coefficients, no disallowed monomials.
class WeilElement {
public:
    explicit WeilElement(SimplicialObject parent) : parent_(std::move(parent)) {}

    WeilElement(SimplicialObject parent, std::map<Monomial, Rational> coeffs)
        : parent_(std::move(parent)) {
        for (auto& [m, c] : coeffs) {
            if (c == 0) continue;
            if (parent_.is_forbidden(m))
                throw error("monomial " + m.str() + " not in the basis of " + parent_.str());
            coeffs_.emplace(m, c);
        }
    }

    static WeilElement zero(const SimplicialObject& obj) { return WeilElement(obj); }

    static WeilElement unit(const SimplicialObject& obj) {
        return monomial(obj, Monomial::unit());
    }

    /// The i-th coordinate as an algebra element.
    static WeilElement variable(const SimplicialObject& obj, int i) {
        if (i < 1 || i > obj.arity())
            throw std::out_of_range("variable index " + std::to_string(i) +
                                    " exceeds arity " + std::to_string(obj.arity()));
        return monomial(obj, Monomial::single(i));
    }

    /// The image of coeff * X_m in the quotient; zero when m is forbidden.
    static WeilElement monomial(const SimplicialObject& obj, const Monomial& m,
                                Rational coeff = Rational(1)) {
        WeilElement e(obj);
        if (coeff != 0 && !obj.is_forbidden(m)) e.coeffs_.emplace(m, std::move(coeff));
        return e;
    }

    const SimplicialObject& parent() const { return parent_; }
    const std::map<Monomial, Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(const Monomial& m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff(Monomial::unit()); }

    /// Coefficients in basis order, dense.
    std::vector<Rational> dense() const {
        std::vector<Rational> out(parent_.dim(), Rational(0));
        for (const auto& [m, c] : coeffs_) out[size_t(parent_.basis_index(m))] = c;
        return out;
    }

    static WeilElement from_dense(const SimplicialObject& obj, const std::vector<Rational>& v) {
        if (int(v.size()) != obj.dim()) throw error("dense vector length != dim");
        WeilElement e(obj);
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) e.coeffs_.emplace(obj.basis()[i], v[i]);
        return e;
    }

    bool operator==(const WeilElement& o) const {
        return parent_ == o.parent_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const WeilElement& o) const { return !(*this == o); }

    std::string str(const char* stem = "d") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : coeffs_) {
            std::string cs = to_string(c);
            bool neg = cs.size() && cs[0] == '-';
            if (out.empty()) {
                if (neg) { out += "-"; cs = cs.substr(1); }
            } else {
                out += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            if (m.is_unit()) out += cs;
            else if (cs == "1") out += m.str(stem);
            else out += cs + "*" + m.str(stem);
        }
        return out;
    }

    friend WeilElement add(const WeilElement& a, const WeilElement& b) {
        require_same(a, b, "add");
        WeilElement out = a;
        for (const auto& [m, c] : b.coeffs_) {
            auto [it, inserted] = out.coeffs_.emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
        return out;
    }

    friend WeilElement scale(const Rational& q, const WeilElement& a) {
        WeilElement out(a.parent_);
        if (q == 0) return out;
        for (const auto& [m, c] : a.coeffs_) out.coeffs_.emplace(m, q * c);
        return out;
    }

    friend WeilElement sub(const WeilElement& a, const WeilElement& b) {
        return add(a, scale(Rational(-1), b));
    }

    /// Product in the quotient: X_S * X_T vanishes when the supports meet
    /// (a square appears) or the union contains a forbidden set.
    friend WeilElement mul(const WeilElement& a, const WeilElement& b) {
        require_same(a, b, "mul");
        WeilElement out(a.parent_);
        for (const auto& [s, u] : a.coeffs_) {
            for (const auto& [t, v] : b.coeffs_) {
                if (!s.disjoint_from(t)) continue;
                Monomial st = s.merged_with(t);
                if (a.parent_.is_forbidden(st)) continue;
                auto [it, inserted] = out.coeffs_.emplace(st, u * v);
                if (!inserted) {
                    it->second += u * v;
                    if (it->second == 0) out.coeffs_.erase(it);
                }
            }
        }
        return out;
    }

    friend WeilElement operator+(const WeilElement& a, const WeilElement& b) { return add(a, b); }
    friend WeilElement operator-(const WeilElement& a, const WeilElement& b) { return sub(a, b); }
    friend WeilElement operator*(const WeilElement& a, const WeilElement& b) { return mul(a, b); }
    friend WeilElement operator*(const Rational& q, const WeilElement& a) { return scale(q, a); }
    WeilElement operator-() const { return scale(Rational(-1), *this); }

private:
    static void require_same(const WeilElement& a, const WeilElement& b, const char* what) {
        if (a.parent_ != b.parent_)
            throw mixed_algebra_error(std::string(what) + ": elements of " + a.parent_.str() +
                                      " and " + b.parent_.str());
    }

    SimplicialObject parent_;
    std::map<Monomial, Rational> coeffs_;
};

/// Convenience builder: sum of coeff * product-of-indices terms.
/// poly(obj, {{1, {1,2}}, {-1, {3}}}) is X1*X2 - X3.
inline WeilElement poly(const SimplicialObject& obj,
                        std::initializer_list<std::pair<long, std::vector<int>>> terms) {
    WeilElement out = WeilElement::zero(obj);
    for (const auto& [c, idx] : terms)
        out = add(out, WeilElement::monomial(obj, Monomial::of(idx), Rational(c)));
    return out;
}

}  // namespace weil
