/**
 * @file upoly.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * Used for rational forms P(q)/Q(q) of invariant series, and as the
 * coefficient ring F[c] of a formal scaling variable c. Division is only
 * defined when exact (in particular by constants), which is all the power
 * series algorithms ever require of their coefficient ring.
 */
#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilbgw {

template <class F>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(long n) { set_constant(F(Rational(n))); }           // NOLINT(implicit)
    UniPoly(int n) { set_constant(F(Rational(n))); }            // NOLINT(implicit)
    UniPoly(const Rational& r) { set_constant(F(r)); }          // NOLINT(implicit)
    UniPoly(const F& x) { set_constant(x); }                    // NOLINT(implicit)
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<F>{F(Rational(0)), F(Rational(1))}); }

    /** @brief Degree; -1 for the zero polynomial. */
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    F coeff(int k) const { return k >= 0 && k <= degree() ? c_[static_cast<std::size_t>(k)] : F(Rational(0)); }
    const std::vector<F>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    const F& leading() const { return c_.back(); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(Rational(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(Rational(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (zero_coeff(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!zero_coeff(b.c_[j])) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    /** @brief Exact division; throws std::domain_error if b does not divide a. */
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
        return q;
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /** @brief Euclidean division a = q b + r with deg r < deg b. */
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
        std::vector<F> r = a.c_;
        int db = b.degree();
        std::vector<F> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), F(Rational(0)));
        F inv = F(Rational(1)) / b.leading();
        for (int i = a.degree(); i >= db; --i) {
            if (zero_coeff(r[static_cast<std::size_t>(i)])) continue;
            F f = r[static_cast<std::size_t>(i)] * inv;
            q[static_cast<std::size_t>(i - db)] = f;
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] = r[static_cast<std::size_t>(i - db + j)] - f * b.c_[static_cast<std::size_t>(j)];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(r))};
    }

    /** @brief Value at x. */
    template <class R>
    R evaluate(const R& x) const {
        R acc = R(Rational(0));
        for (int k = degree(); k >= 0; --k) acc = acc * x + R(c_[static_cast<std::size_t>(k)]);
        return acc;
    }

private:
    void set_constant(const F& x) {
        c_.clear();
        if (!zero_coeff(x)) c_.push_back(x);
    }
    void trim() {
        while (!c_.empty() && zero_coeff(c_.back())) c_.pop_back();
    }
    static bool zero_coeff(const F& x) { return detail::elem_is_zero(x); }
    std::vector<F> c_;
};

template <class F>
bool is_zero(const UniPoly<F>& p) {
    return p.is_zero();
}

/** @brief Monic gcd over a field. */
template <class F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    F inv = F(Rational(1)) / a.leading();
    return UniPoly<F>(F(inv)) * a;
}

}  // namespace hilbgw
