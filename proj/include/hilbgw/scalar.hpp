/**
 * @file scalar.hpp
 * @brief Rational functions in the equivariant parameters t1, t2 over Q.
 *
 * A Scalar is num/den with num, den in Z[t1,t2] and a canonical normal form:
 * gcd(num, den) = 1 as polynomials, the integer contents of num and den are
 * coprime, and the graded-lex leading coefficient of den is positive. Equal
 * values therefore have identical representations and equality is structural.
 */
#pragma once

#include "poly.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hilbgw {

class Scalar {
public:
    Scalar() : den_(mpz_class(1)) {}
    Scalar(long n) : num_(mpz_class(n)), den_(mpz_class(1)) {}  // NOLINT(implicit)
    Scalar(int n) : Scalar(static_cast<long>(n)) {}             // NOLINT(implicit)
    Scalar(const Rational& r) : num_(r.num()), den_(r.den()) {}  // NOLINT(implicit)
    explicit Scalar(const Poly& p) : num_(p), den_(mpz_class(1)) { normalize_content(); }
    /** @brief num/den, reduced to canonical form. */
    Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        reduce();
    }

    static Scalar t1() { return Scalar(Poly::monomial(mpz_class(1), 1, 0)); }
    static Scalar t2() { return Scalar(Poly::monomial(mpz_class(1), 0, 1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_constant() && den_.is_constant() && num_.constant_value() == den_.constant_value(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /** @brief Value of a constant scalar; throws if t1 or t2 occurs. */
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("Scalar: not a constant");
        return Rational(num_.constant_value(), den_.constant_value());
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b, false); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return add(a, b, true); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.den_.is_constant() && b.den_.is_constant() && a.den_.constant_value() == 1 && b.den_.constant_value() == 1)
            return Scalar(a.num_ * b.num_);
        // Cross-cancel before multiplying: (a/b)(c/d) with g1 = gcd(a,d), g2 = gcd(c,b).
        Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        Poly n = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
        Poly d = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
        return from_coprime(std::move(n), std::move(d));
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        return from_coprime(den_, num_);
    }
    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r(1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /** @brief The involution t_i -> -t_i. */
    Scalar conj() const { return from_coprime(num_.conj(), den_.conj()); }
    /** @brief The involution t1 <-> t2. */
    Scalar swap_variables() const { return from_coprime(num_.swap_variables(), den_.swap_variables()); }

    /** @brief Evaluate at (x, y) in a field R constructible from Rational. */
    template <class R>
    R evaluate(const R& x, const R& y) const {
        return num_.evaluate(x, y) / den_.evaluate(x, y);
    }

    /** @brief Canonical string "(P)/(Q)". */
    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }
    /** @brief Inverse of str(); also accepts a bare polynomial. */
    static Scalar parse(const std::string& s) {
        auto strip = [](std::string x) {
            if (x.size() >= 2 && x.front() == '(' && x.back() == ')') return x.substr(1, x.size() - 2);
            return x;
        };
        auto pos = s.find(")/(");
        if (pos == std::string::npos) return Scalar(Poly::parse(strip(s)), Poly(mpz_class(1)));
        return Scalar(Poly::parse(strip(s.substr(0, pos + 1))), Poly::parse(strip(s.substr(pos + 2))));
    }

    std::size_t hash() const {
        return std::hash<std::string>{}(str());
    }

private:
    static Scalar from_coprime(Poly n, Poly d) {
        Scalar r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        if (r.den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        r.normalize_content();
        return r;
    }

    void normalize_content() {
        if (num_.is_zero()) {
            den_ = Poly(mpz_class(1));
            return;
        }
        mpz_class cn = num_.content(), cd = den_.content(), g;
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (den_.leading_coefficient() < 0) g = -g;
        if (g != 1) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(mpz_class(1));
            return;
        }
        if (!den_.is_constant()) {
            Poly g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = exact_quotient(num_, g);
                den_ = exact_quotient(den_, g);
            }
        }
        normalize_content();
    }

    static Scalar add(const Scalar& a, const Scalar& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        if (a.den_ == b.den_) {
            Poly n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            if (a.den_.is_constant()) return from_coprime(std::move(n), a.den_);
            Scalar r;
            r.num_ = std::move(n);
            r.den_ = a.den_;
            r.reduce();
            return r;
        }
        // Henrici: with g = gcd(b, d), the result is (a d' + c b') / (g b' d') and
        // only gcd(a d' + c b', g) can be nontrivial.
        Poly g = gcd(a.den_, b.den_);
        Poly bq = exact_quotient(a.den_, g), dq = exact_quotient(b.den_, g);
        Poly n = subtract ? a.num_ * dq - b.num_ * bq : a.num_ * dq + b.num_ * bq;
        if (n.is_zero()) return Scalar();
        Poly d = bq * dq;
        if (!g.is_constant()) {
            Poly h = gcd(n, g);
            if (!h.is_constant()) {
                n = exact_quotient(n, h);
                g = exact_quotient(g, h);
            }
            d = d * g;
        } else {
            d = d * g;
        }
        return from_coprime(std::move(n), std::move(d));
    }

    Poly num_, den_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hilbgw
