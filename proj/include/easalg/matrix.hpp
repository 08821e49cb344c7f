#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "easalg/rational.hpp"

namespace easalg {

// Dense exact matrix. Row-major storage; matrices act on column coordinate
// vectors, so column (i*d+j) of a map on A(x)A is the image of e_i(x)e_j.
// The flat index convention e_i(x)e_j -> i*d+j (left factor major) is shared
// by every module.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        assert(a.cols_ == b.rows_);
        RationalMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& v = a(i, k);
                if (is_zero(v)) continue;  // catalog maps are sparse; skipping zeros keeps
                                           // the 729x729 products cheap
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j))) c(i, j) += v * b(k, j);
            }
        return c;
    }

    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        RationalMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }

    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        RationalMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        assert(v.size() == cols_);
        std::vector<Rational> out(rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (is_zero(v[j])) continue;
            for (std::size_t i = 0; i < rows_; ++i)
                if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        }
        return out;
    }

    // First (row, col) where the two matrices differ, if any.
    static std::optional<std::pair<std::size_t, std::size_t>> first_difference(
        const RationalMatrix& a, const RationalMatrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (a(i, j) != b(i, j)) return std::make_pair(i, j);
        return std::nullopt;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Kronecker product, (A(x)B)[(i*rB+k),(j*cB+l)] = A[i,j]*B[k,l].
inline RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!is_zero(b(k, l)))
                        c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return c;
}

// Permutation matrix of the flip e_i(x)e_j -> e_j(x)e_i on a d-dimensional space.
inline RationalMatrix flip_matrix(std::size_t d) {
    RationalMatrix m(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(j * d + i, i * d + j) = 1;
    return m;
}

inline std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        Rational pv = m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= pv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

struct NotInvertible {
    std::size_t rank;  // witness: rank < dimension
};

// Exact inverse by Gauss-Jordan elimination over Q, or the rank as a witness.
inline std::variant<RationalMatrix, NotInvertible> invert(const RationalMatrix& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = r;
        while (piv < n && is_zero(a(piv, c))) ++piv;
        if (piv == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(r, j), a(piv, j));
            std::swap(inv(r, j), inv(piv, j));
        }
        Rational pv = a(r, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(r, j) /= pv;
            inv(r, j) /= pv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(r, j);
                inv(i, j) -= f * inv(r, j);
            }
        }
        ++r;
    }
    if (r < n) return NotInvertible{r};
    return inv;
}

// Cofactor-expansion determinant; O(n!) and only meant as an independent
// cross-check for small n.
inline Rational determinant_cofactor(const RationalMatrix& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(m(0, j))) continue;
        RationalMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(i - 1, cc++) = m(i, c);
            }
        }
        Rational term = m(0, j) * determinant_cofactor(sub);
        if (j % 2) det -= term; else det += term;
    }
    return det;
}

}  // namespace easalg
