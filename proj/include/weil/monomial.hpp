#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weil {

/// A square-free monomial: a set of coordinate indices in [1, n].
/// The empty set is the unit monomial 1. Squares never occur because every
/// coordinate is a square-zero infinitesimal.
class Monomial {
public:
    static constexpr int max_index = 20;

    Monomial() = default;

    static Monomial unit() { return Monomial(); }

    static Monomial single(int i) {
        check_index(i);
        Monomial m;
        m.bits_ = uint32_t(1) << (i - 1);
        return m;
    }

    static Monomial of(std::initializer_list<int> indices) {
        Monomial m;
        for (int i : indices) m = m.with(i);
        return m;
    }

    static Monomial of(const std::vector<int>& indices) {
        Monomial m;
        for (int i : indices) m = m.with(i);
        return m;
    }

    Monomial with(int i) const {
        check_index(i);
        Monomial m = *this;
        m.bits_ |= uint32_t(1) << (i - 1);
        return m;
    }

    bool contains(int i) const {
        return i >= 1 && i <= max_index && (bits_ >> (i - 1)) & 1u;
    }

    int degree() const { return __builtin_popcount(bits_); }
    bool is_unit() const { return bits_ == 0; }
    int max_used_index() const { return bits_ == 0 ? 0 : 32 - __builtin_clz(bits_); }

    bool subset_of(const Monomial& o) const { return (bits_ & o.bits_) == bits_; }
    bool disjoint_from(const Monomial& o) const { return (bits_ & o.bits_) == 0; }

    Monomial merged_with(const Monomial& o) const {
        Monomial m;
        m.bits_ = bits_ | o.bits_;
        return m;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 1; i <= max_index; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    bool operator==(const Monomial& o) const { return bits_ == o.bits_; }
    bool operator!=(const Monomial& o) const { return bits_ != o.bits_; }

    /// Order by total degree, then lexicographically on the sorted index
    /// sequence; this is the basis order used everywhere.
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        uint32_t a = bits_, b = o.bits_;
        while (a && b) {
            int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
            if (ia != ib) return ia < ib;
            a &= a - 1;
            b &= b - 1;
        }
        return false;
    }

    uint32_t bits() const { return bits_; }

    /// "1" or e.g. "d1*d3" using the given variable stem.
    std::string str(const char* stem = "d") const {
        if (is_unit()) return "1";
        std::string out;
        for (int i : indices()) {
            if (!out.empty()) out += "*";
            out += stem + std::to_string(i);
        }
        return out;
    }

private:
    static void check_index(int i) {
        if (i < 1 || i > max_index)
            throw std::out_of_range("monomial index " + std::to_string(i) +
                                    " outside [1, " + std::to_string(max_index) + "]");
    }

    uint32_t bits_ = 0;
};

}  // namespace weil
