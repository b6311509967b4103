#ifndef YB_MATRIX_HPP
#define YB_MATRIX_HPP

#include <yb/error.hpp>
#include <yb/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace yb {

template <FieldScalar T>
using Vector = std::vector<T>;

template <FieldScalar T>
T dot(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size()) fail(ErrorKind::Shape, "dot: length mismatch");
    T acc = scalar<T>(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

template <FieldScalar T>
real_t<T> max_modulus(std::span<const T> v) {
    real_t<T> m(0);
    for (const auto& x : v) m = std::max<real_t<T>>(m, magnitude(x));
    return m;
}

/// Dense n x n matrix over one scalar backend, stored row-major.
template <FieldScalar T>
class SquareMatrix {
public:
    using value_type = T;

    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, scalar<T>(0)) {}

    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        a_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) fail(ErrorKind::Shape, "SquareMatrix: ragged initializer");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar<T>(1);
        return m;
    }

    static SquareMatrix scalar_matrix(std::size_t n, const T& c) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }

    static SquareMatrix diagonal(std::span<const T> d) {
        SquareMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::span<const T> entries() const noexcept { return a_; }

    SquareMatrix transpose() const {
        SquareMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T acc = scalar<T>(0);
        for (std::size_t i = 0; i < n_; ++i) acc += (*this)(i, i);
        return acc;
    }

    real_t<T> max_modulus() const { return yb::max_modulus<T>(a_); }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const T& x) { return yb::is_zero(x); });
    }

    Vector<T> apply(std::span<const T> v) const {
        if (v.size() != n_) fail(ErrorKind::Shape, "matrix-vector product: length mismatch");
        Vector<T> out(n_, scalar<T>(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    T determinant() const {
        SquareMatrix w = *this;
        T det = scalar<T>(1);
        for (std::size_t col = 0; col < n_; ++col) {
            const std::size_t p = w.pivot_row(col);
            if (p == n_) return scalar<T>(0);
            if (p != col) {
                w.swap_rows(p, col);
                det = -det;
            }
            det *= w(col, col);
            for (std::size_t r = col + 1; r < n_; ++r) {
                if (yb::is_zero(w(r, col))) continue;
                const T f = w(r, col) / w(col, col);
                for (std::size_t c = col; c < n_; ++c) w(r, c) -= f * w(col, c);
            }
        }
        return det;
    }

    bool is_invertible() const {
        if (n_ == 0) return false;
        return !scalar_traits<T>::negligible(determinant(), det_scale());
    }

    /// Gauss-Jordan inverse; throws invalid-group-element on a singular matrix.
    SquareMatrix inverse() const {
        SquareMatrix w = *this;
        SquareMatrix inv = identity(n_);
        const auto scale = max_modulus();
        for (std::size_t col = 0; col < n_; ++col) {
            const std::size_t p = w.pivot_row(col);
            if (p == n_ || scalar_traits<T>::negligible(w(p, col), scale))
                fail(ErrorKind::InvalidGroupElement, "matrix is singular");
            if (p != col) {
                w.swap_rows(p, col);
                inv.swap_rows(p, col);
            }
            const T piv = w(col, col);
            for (std::size_t c = 0; c < n_; ++c) {
                w(col, c) /= piv;
                inv(col, c) /= piv;
            }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == col || yb::is_zero(w(r, col))) continue;
                const T f = w(r, col);
                for (std::size_t c = 0; c < n_; ++c) {
                    w(r, c) -= f * w(col, c);
                    inv(r, c) -= f * inv(col, c);
                }
            }
        }
        return inv;
    }

    /// Throws unless the matrix can act as an element of GL_n.
    const SquareMatrix& require_group_element(std::string_view who) const {
        if (!is_invertible()) fail(ErrorKind::InvalidGroupElement, std::string(who) + ": singular matrix");
        return *this;
    }

    SquareMatrix& operator+=(const SquareMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    SquareMatrix& operator-=(const SquareMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    SquareMatrix& operator*=(const T& c) {
        for (auto& x : a_) x *= c;
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(SquareMatrix a, const T& c) { return a *= c; }
    friend SquareMatrix operator*(const T& c, SquareMatrix a) { return a *= c; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        a.check_same(b);
        const std::size_t n = a.n_;
        SquareMatrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (yb::is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    /// Entrywise equality; meaningful as an identity test only in exact mode.
    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.n_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.n_; ++j)
                os << (j ? ", " : "") << scalar_traits<T>::to_string(m(i, j));
            os << ']';
        }
        return os << ']';
    }

private:
    void check_same(const SquareMatrix& o) const {
        if (o.n_ != n_) fail(ErrorKind::Shape, "matrix dimension mismatch");
    }

    void swap_rows(std::size_t r, std::size_t s) {
        for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(r, c), (*this)(s, c));
    }

    // Exact: first nonzero entry. Float: largest modulus (partial pivoting).
    std::size_t pivot_row(std::size_t col) const {
        std::size_t best = n_;
        real_t<T> best_mag(0);
        for (std::size_t r = col; r < n_; ++r) {
            if (yb::is_zero((*this)(r, col))) continue;
            if constexpr (scalar_traits<T>::exact) return r;
            const auto m = magnitude((*this)(r, col));
            if (best == n_ || m > best_mag) {
                best = r;
                best_mag = m;
            }
        }
        return best;
    }

    // Hadamard bound on |det|; the reference scale for float singularity.
    real_t<T> det_scale() const {
        if constexpr (scalar_traits<T>::exact) {
            return real_t<T>(1);
        } else {
            double s = 1.0;
            for (std::size_t i = 0; i < n_; ++i) {
                double row = 0.0;
                for (std::size_t j = 0; j < n_; ++j) row += std::norm((*this)(i, j));
                s *= std::sqrt(row);
            }
            return s;
        }
    }

    std::size_t n_ = 0;
    std::vector<T> a_;
};

}  // namespace yb

#endif  // YB_MATRIX_HPP
