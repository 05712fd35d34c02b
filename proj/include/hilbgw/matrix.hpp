/**
 * @file matrix.hpp
 * @brief Dense matrices over exact rings and Gaussian elimination with unit pivots.
 *
 * Entries may be field elements (Rational, Scalar, ...) or truncated power
 * series; elimination only ever divides by pivots that are units of the ring
 * (nonzero field elements, or series with nonzero constant term), so it is
 * exact over Q(t1,t2)[[q]] whenever the q = 0 slice is invertible.
 */
#pragma once

#include "series.hpp"

#include <stdexcept>
#include <type_traits>
#include <vector>

namespace hilbgw {

template <class T>
struct is_series : std::false_type {};
template <class F>
struct is_series<Series<F>> : std::true_type {};

/** @brief Whether x is invertible in its ring. */
template <class T>
bool is_unit_element(const T& x) {
    if constexpr (is_series<T>::value) return x.is_unit();
    else return !is_zero(x);
}

/** @brief Inverse of a unit. */
template <class T>
T unit_inverse(const T& x) {
    if constexpr (is_series<T>::value) return x.inverse();
    else return T(1) / x;
}

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d, const T& zero) {
        Matrix m(d.size(), d.size(), zero);
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }
    void set_column(std::size_t j, const std::vector<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, a_.empty() ? T() : a_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class U, class Fn>
    Matrix<U> map(Fn fn) const {
        Matrix<U> m(rows_, cols_, U());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = fn((*this)(i, j));
        return m;
    }

    bool is_zero_matrix() const {
        for (const auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (std::size_t k = 0; k < x.a_.size(); ++k)
            if (!(x.a_[k] == y.a_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        check_same(x, y);
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(x.rows_, y.cols_, x.zero_like());
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (is_zero(xik)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const T& ykj = y(k, j);
                    if (is_zero(ykj)) continue;
                    r(i, j) = r(i, j) + xik * ykj;
                }
            }
        return r;
    }
    friend std::vector<T> operator*(const Matrix& x, const std::vector<T>& v) {
        if (x.cols_ != v.size()) throw std::invalid_argument("Matrix: dimension mismatch in matrix-vector product");
        std::vector<T> r(x.rows_, x.zero_like());
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k)
                if (!is_zero(x(i, k)) && !is_zero(v[k])) r[i] = r[i] + x(i, k) * v[k];
        return r;
    }
    /** @brief Entrywise scaling by a ring element (applied on the left). */
    friend Matrix operator*(const T& s, const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_) v = s * v;
        return r;
    }

    /** @brief A zero of the entry ring with the same shape (for series: same truncation order). */
    T zero_like() const {
        if (a_.empty()) return T();
        const T& s = a_[0];
        return s - s;
    }

    const std::vector<T>& data() const { return a_; }

private:
    static void check_same(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Matrix: dimension mismatch");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

/**
 * @brief Solve A X = B by Gaussian elimination with unit pivots.
 *
 * Throws std::domain_error when no unit pivot exists in some column, which
 * for series entries means the q = 0 slice of A is singular.
 */
template <class T>
Matrix<T> solve(Matrix<T> A, Matrix<T> B) {
    const std::size_t n = A.rows();
    if (A.cols() != n || B.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !is_unit_element(A(p, c))) ++p;
        if (p == n) throw std::domain_error("solve: singular system (no unit pivot)");
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(p, j), A(c, j));
            for (std::size_t j = 0; j < B.cols(); ++j) std::swap(B(p, j), B(c, j));
        }
        T inv = unit_inverse(A(c, c));
        for (std::size_t j = 0; j < n; ++j) A(c, j) = inv * A(c, j);
        for (std::size_t j = 0; j < B.cols(); ++j) B(c, j) = inv * B(c, j);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(A(r, c))) continue;
            T f = A(r, c);
            for (std::size_t j = 0; j < n; ++j) A(r, j) = A(r, j) - f * A(c, j);
            for (std::size_t j = 0; j < B.cols(); ++j) B(r, j) = B(r, j) - f * B(c, j);
        }
    }
    return B;
}

/** @brief Inverse of a square matrix with a unit determinant. */
template <class T>
Matrix<T> inverse(const Matrix<T>& A, const T& zero, const T& one) {
    return solve(A, Matrix<T>::identity(A.rows(), zero, one));
}

/**
 * @brief Solve a possibly singular or overdetermined linear system over a field.
 *
 * Returns true and one solution (free variables set to zero) when the system
 * is consistent, false otherwise.
 */
template <class F>
bool solve_any(Matrix<F> A, std::vector<F> b, std::vector<F>& x) {
    const std::size_t m = A.rows(), n = A.cols();
    std::vector<std::size_t> pivcol;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < m; ++c) {
        std::size_t p = row;
        while (p < m && is_zero(A(p, c))) ++p;
        if (p == m) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(A(p, j), A(row, j));
        std::swap(b[p], b[row]);
        F inv = F(1) / A(row, c);
        for (std::size_t j = 0; j < n; ++j) A(row, j) = inv * A(row, j);
        b[row] = inv * b[row];
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || is_zero(A(r, c))) continue;
            F f = A(r, c);
            for (std::size_t j = 0; j < n; ++j) A(r, j) = A(r, j) - f * A(row, j);
            b[r] = b[r] - f * b[row];
        }
        pivcol.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (!is_zero(b[r])) return false;
    x.assign(n, F(0));
    for (std::size_t k = 0; k < pivcol.size(); ++k) x[pivcol[k]] = b[k];
    return true;
}

}  // namespace hilbgw
