#pragma once

#include <optional>
#include <vector>

#include "weil/errors.hpp"
#include "weil/rational.hpp"

namespace weil {

/// Dense exact-rational matrix. Dimensions in this project stay small
/// (at most a few hundred), so no sparsity games.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), Rational(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    friend Matrix operator*(const Matrix& A, const Matrix& B) {
        if (A.cols_ != B.rows_) throw error("matrix product shape mismatch");
        Matrix C(A.rows_, B.cols_);
        for (int i = 0; i < A.rows_; ++i)
            for (int k = 0; k < A.cols_; ++k) {
                const Rational& aik = A(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < B.cols_; ++j) {
                    const Rational& bkj = B(k, j);
                    if (bkj != 0) C(i, j) += aik * bkj;
                }
            }
        return C;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (int(x.size()) != cols_) throw error("matrix-vector shape mismatch");
        std::vector<Rational> y(rows_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Reduced row echelon form, in place; returns the pivot columns.
/// Exact arithmetic, no pivot thresholds.
inline std::vector<int> rref_in_place(Matrix& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
        int p = -1;
        for (int i = r; i < M.rows(); ++i)
            if (M(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < M.cols(); ++j) std::swap(M(r, j), M(p, j));
        Rational inv = 1 / M(r, c);
        for (int j = 0; j < M.cols(); ++j) M(r, j) *= inv;
        for (int i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c) == 0) continue;
            Rational f = M(i, c);
            for (int j = 0; j < M.cols(); ++j)
                if (M(r, j) != 0) M(i, j) -= f * M(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(Matrix M) { return int(rref_in_place(M).size()); }

/// Basis of the null space of M, one vector per free column. The basis is
/// canonical for the RREF: free coordinate = 1, other free coordinates = 0.
inline std::vector<std::vector<Rational>> kernel_basis(Matrix M) {
    std::vector<int> piv = rref_in_place(M);
    std::vector<bool> is_piv(size_t(M.cols()), false);
    for (int c : piv) is_piv[size_t(c)] = true;
    std::vector<std::vector<Rational>> out;
    for (int fc = 0; fc < M.cols(); ++fc) {
        if (is_piv[size_t(fc)]) continue;
        std::vector<Rational> v(size_t(M.cols()), Rational(0));
        v[size_t(fc)] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[size_t(piv[r])] = -M(int(r), fc);
        out.push_back(std::move(v));
    }
    return out;
}

/// Solve A x = b exactly. Returns nullopt when inconsistent. When the system
/// is underdetermined the free coordinates are set to zero.
inline std::optional<std::vector<Rational>> solve(const Matrix& A, const std::vector<Rational>& b) {
    if (int(b.size()) != A.rows()) throw error("solve: rhs length mismatch");
    Matrix M(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) M(i, j) = A(i, j);
        M(i, A.cols()) = b[i];
    }
    std::vector<int> piv = rref_in_place(M);
    if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
    std::vector<Rational> x(size_t(A.cols()), Rational(0));
    for (size_t r = 0; r < piv.size(); ++r) x[size_t(piv[r])] = M(int(r), A.cols());
    return x;
}

}  // namespace weil
