/**
 * @file series.hpp
 * @brief Truncated power series over an exact coefficient field.
 *
 * Series<F> holds coefficients 0..N of a power series in one variable; N is
 * the truncation order and is always explicit. Binary operations on operands
 * of different orders truncate to the smaller order. The variable is q for
 * QSeries and z or u elsewhere; the type does not care.
 */
#pragma once

#include "rational.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hilbgw {

template <class F>
class Series {
public:
    Series() : c_(1, F(0)) {}
    /** @brief Zero series of order N. */
    explicit Series(int order) : c_(static_cast<std::size_t>(checked(order)) + 1, F(0)) {}
    /** @brief Constant series of order N. */
    Series(const F& constant, int order) : Series(order) { c_[0] = constant; }
    /** @brief Series with the given coefficients; order = size - 1. */
    explicit Series(std::vector<F> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
    }
    /** @brief The variable itself (requires order >= 1 to be nonzero). */
    static Series variable(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = F(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const F& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    F& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    /** @brief Coefficient k, or zero beyond the truncation order. */
    F coeff(int k) const { return k <= order() ? c_[static_cast<std::size_t>(k)] : F(0); }
    const std::vector<F>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!hilbgw_is_zero(x)) return false;
        return true;
    }
    /** @brief Unit in the power-series ring: nonzero constant term. */
    bool is_unit() const { return !hilbgw_is_zero(c_[0]); }

    Series truncate(int order) const {
        if (order > this->order()) throw std::invalid_argument("Series: cannot extend truncation order");
        return Series(std::vector<F>(c_.begin(), c_.begin() + order + 1));
    }

    friend bool operator==(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        for (int k = 0; k <= n; ++k)
            if (!(a[k] == b[k])) return false;
        return true;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series operator-() const {
        Series r(order());
        for (int k = 0; k <= order(); ++k) r[k] = -c_[static_cast<std::size_t>(k)];
        return r;
    }
    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int k = 0; k <= n; ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int k = 0; k <= n; ++k) r[k] = a[k] - b[k];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (hilbgw_is_zero(a[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (hilbgw_is_zero(b[j])) continue;
                r[i + j] = r[i + j] + a[i] * b[j];
            }
        }
        return r;
    }
    friend Series operator*(const F& s, const Series& a) {
        Series r(a.order());
        if (hilbgw_is_zero(s)) return r;
        for (int k = 0; k <= a.order(); ++k)
            if (!hilbgw_is_zero(a[k])) r[k] = s * a[k];
        return r;
    }
    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    /** @brief Multiplicative inverse; requires a nonzero constant term. */
    Series inverse() const {
        if (!is_unit()) throw std::domain_error("Series: inverse of a non-unit");
        int n = order();
        Series r(n);
        F c0inv = F(1) / c_[0];
        r[0] = c0inv;
        for (int k = 1; k <= n; ++k) {
            F acc(0);
            for (int j = 1; j <= k; ++j)
                if (!hilbgw_is_zero(c_[static_cast<std::size_t>(j)])) acc = acc + c_[static_cast<std::size_t>(j)] * r[k - j];
            r[k] = -(acc * c0inv);
        }
        return r;
    }

    /** @brief The Euler operator x d/dx: coefficient k is multiplied by k. */
    Series euler_derivative() const {
        Series r(order());
        for (int k = 1; k <= order(); ++k) r[k] = F(Rational(k)) * c_[static_cast<std::size_t>(k)];
        return r;
    }
    /** @brief Inverse of the Euler operator on series without constant term; the constant is set to c0. */
    Series euler_integral(const F& c0) const {
        if (!hilbgw_is_zero(c_[0])) throw std::domain_error("Series: Euler integral of a series with constant term");
        Series r(order());
        r[0] = c0;
        for (int k = 1; k <= order(); ++k) r[k] = c_[static_cast<std::size_t>(k)] / F(Rational(k));
        return r;
    }
    /** @brief d/dx, with the order dropping by one. */
    Series derivative() const {
        if (order() == 0) return Series(0);
        Series r(order() - 1);
        for (int k = 1; k <= order(); ++k) r[k - 1] = F(Rational(k)) * c_[static_cast<std::size_t>(k)];
        return r;
    }

    /** @brief Substitute x -> s * x (coefficient k multiplied by s^k). */
    Series rescale(const F& s) const {
        Series r(order());
        F p(1);
        for (int k = 0; k <= order(); ++k) {
            r[k] = p * c_[static_cast<std::size_t>(k)];
            p = p * s;
        }
        return r;
    }

    /** @brief Composition f(g) for g with zero constant term, by Horner's scheme. */
    Series compose(const Series& g) const {
        if (!hilbgw_is_zero(g[0])) throw std::domain_error("Series: composition with nonzero constant term");
        int n = std::min(order(), g.order());
        Series r(n);
        for (int k = order(); k >= 0; --k) {
            r = r * g.truncate(n);
            r[0] = r[0] + c_[static_cast<std::size_t>(k)];
        }
        return r;
    }

    template <class G, class Fn>
    Series<G> map(Fn fn) const {
        std::vector<G> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(fn(x));
        return Series<G>(std::move(out));
    }

private:
    static int checked(int order) {
        if (order < 0) throw std::invalid_argument("Series: negative truncation order");
        return order;
    }
    static bool hilbgw_is_zero(const F& x) { return detail::elem_is_zero(x); }
    std::vector<F> c_;
};

template <class F>
bool is_zero(const Series<F>& s) {
    return s.is_zero();
}

/** @brief exp(s) for s with zero constant term. */
template <class F>
Series<F> series_exp(const Series<F>& s) {
    if (!is_zero(s[0])) throw std::domain_error("series_exp: nonzero constant term");
    int n = s.order();
    Series<F> e(n);
    e[0] = F(1);
    // e' = s' e  =>  k e_k = sum_{j=1..k} j s_j e_{k-j}
    for (int k = 1; k <= n; ++k) {
        F acc(0);
        for (int j = 1; j <= k; ++j)
            if (!is_zero(s[j])) acc = acc + F(Rational(j)) * s[j] * e[k - j];
        e[k] = acc / F(Rational(k));
    }
    return e;
}

/** @brief log(s) for s with constant term 1. */
template <class F>
Series<F> series_log(const Series<F>& s) {
    if (!(s[0] == F(1))) throw std::domain_error("series_log: constant term must be 1");
    int n = s.order();
    Series<F> l(n);
    // s l' = s'  =>  k l_k = k s_k - sum_{j=1..k-1} j l_j s_{k-j}
    for (int k = 1; k <= n; ++k) {
        F acc = F(Rational(k)) * s[k];
        for (int j = 1; j < k; ++j)
            if (!is_zero(l[j])) acc = acc - F(Rational(j)) * l[j] * s[k - j];
        l[k] = acc / F(Rational(k));
    }
    return l;
}

using QSeries = Series<Scalar>;

}  // namespace hilbgw
