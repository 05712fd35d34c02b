/**
 * @file ext_scalar.hpp
 * @brief The extension Q(t1,t2)(i, s) with i^2 = -1 and s^2 = t1*t2.
 *
 * Elements are stored by their four coordinates over the base field in the
 * basis {1, i, s, i*s}, which makes equality decidable coordinate-wise.
 * Only the crepant comparison uses this type; values crossing back into the
 * core pipeline go through project(), which asserts the extension
 * coordinates vanish.
 */
#pragma once

#include "scalar.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace hilbgw {

class ExtScalar {
public:
    ExtScalar() = default;
    ExtScalar(long n) : c_{Scalar(n), Scalar(), Scalar(), Scalar()} {}            // NOLINT(implicit)
    ExtScalar(int n) : ExtScalar(static_cast<long>(n)) {}                        // NOLINT(implicit)
    ExtScalar(const Rational& r) : c_{Scalar(r), Scalar(), Scalar(), Scalar()} {}  // NOLINT(implicit)
    ExtScalar(const Scalar& x) : c_{x, Scalar(), Scalar(), Scalar()} {}            // NOLINT(implicit)
    ExtScalar(const Scalar& one, const Scalar& i, const Scalar& s, const Scalar& is) : c_{one, i, s, is} {}

    static ExtScalar i() { return ExtScalar(Scalar(), Scalar(1), Scalar(), Scalar()); }
    static ExtScalar s() { return ExtScalar(Scalar(), Scalar(), Scalar(1), Scalar()); }

    /** @brief Coordinate k in the basis {1, i, s, i*s}. */
    const Scalar& coord(int k) const { return c_.at(static_cast<std::size_t>(k)); }

    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    bool in_base_field() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    /** @brief Lossless projection to the base field; throws if an extension coordinate is nonzero. */
    Scalar project() const {
        if (!in_base_field()) throw std::domain_error("ExtScalar: value has nonzero extension coordinates");
        return c_[0];
    }

    friend bool operator==(const ExtScalar& a, const ExtScalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

    ExtScalar operator-() const { return ExtScalar(-c_[0], -c_[1], -c_[2], -c_[3]); }
    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
        return ExtScalar(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
    }
    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
        return ExtScalar(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
    }
    friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
        const Scalar T = Scalar::t1() * Scalar::t2();
        const auto& [a, b, c, d] = x.c_;
        const auto& [e, f, g, h] = y.c_;
        return ExtScalar(a * e - b * f + T * (c * g - d * h),
                         a * f + b * e + T * (c * h + d * g),
                         a * g + c * e - (b * h + d * f),
                         a * h + d * e + b * g + c * f);
    }
    friend ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) { return a * b.inverse(); }
    ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }
    ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }

    /** @brief Inverse via the two conjugations s -> -s and then i -> -i. */
    ExtScalar inverse() const {
        if (is_zero()) throw std::domain_error("ExtScalar: inverse of zero");
        // x = A + B s with A = a + b i, B = c + d i; x * (A - B s) = A^2 - T B^2 =: N in Q(t)(i).
        ExtScalar sconj(c_[0], c_[1], -c_[2], -c_[3]);
        ExtScalar n = *this * sconj;  // lies in Q(t)(i)
        const Scalar& p = n.c_[0];
        const Scalar& q = n.c_[1];
        Scalar norm = p * p + q * q;
        ExtScalar ninv(p / norm, -q / norm, Scalar(), Scalar());
        return sconj * ninv;
    }

    ExtScalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        ExtScalar r(1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        return "[" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ", " + c_[3].str() + "]";
    }

private:
    std::array<Scalar, 4> c_;
};

inline bool is_zero(const ExtScalar& x) { return x.is_zero(); }

}  // namespace hilbgw
