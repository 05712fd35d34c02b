/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers.
 *
 * Thin value type over GMP's mpq_class. The GMP representation is already
 * canonical (reduced, positive denominator); this wrapper adds string
 * round-tripping in the "p/q" form used by caches and reports, and the
 * small conveniences the rest of the library relies on.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hilbgw {

/** @brief Exact rational number with gcd(|num|, den) = 1 and den > 0. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                           // NOLINT(implicit)
    Rational(int n) : v_(n) {}                            // NOLINT(implicit)
    Rational(const mpz_class& n) : v_(n) {}               // NOLINT(implicit)
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /** @brief Parse "p" or "p/q". */
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q.canonicalize();
        return Rational(q);
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    /** @brief Integer power, negative exponents allowed for nonzero values. */
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

namespace detail {
/** @brief Zero test found by argument-dependent lookup; usable inside classes with an is_zero member. */
template <class T>
bool elem_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

/** @brief n! as a Rational. */
inline Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/** @brief Binomial coefficient C(n, k) for 0 <= k <= n. */
inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace hilbgw
