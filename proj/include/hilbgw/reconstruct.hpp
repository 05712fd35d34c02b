/**
 * @file reconstruct.hpp
 * @brief Recovering a rational function P(q)/Q(q) from its Taylor coefficients.
 */
#pragma once

#include "matrix.hpp"
#include "series.hpp"
#include "upoly.hpp"

#include <stdexcept>
#include <string>

namespace hilbgw {

/** @brief A rational function P(q)/Q(q) over Q(t1,t2), normalized so that Q(0) = 1. */
struct RationalQ {
    UniPoly<Scalar> num;
    UniPoly<Scalar> den;

    /** @brief Taylor expansion at q = 0 through q^order. */
    QSeries expand(int order) const {
        QSeries p(order), d(order);
        for (int k = 0; k <= std::min(order, num.degree()); ++k) p[k] = num.coeff(k);
        for (int k = 0; k <= std::min(order, den.degree()); ++k) d[k] = den.coeff(k);
        return p / d;
    }
    /** @brief "[P0, P1, ...] / [Q0, Q1, ...]" with canonical Scalar strings. */
    std::string str() const {
        auto list = [](const UniPoly<Scalar>& u) {
            std::string s = "[";
            for (int k = 0; k <= u.degree(); ++k) s += (k ? ", " : "") + u.coeff(k).str();
            return s + "]";
        };
        return list(num) + " / " + list(den);
    }
};

/** @brief Too few coefficients were supplied for the requested degree bound. */
struct InsufficientCoefficients : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/** @brief No rational function within the degree bound matches the coefficients. */
struct NoRationalForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * @brief Find P/Q with deg P, deg Q <= max_deg matching every coefficient of s.
 *
 * Requires s.order() >= 2*max_deg + 1 so that a match is not forced by
 * counting alone; every available coefficient is checked. The denominator is
 * the smallest degree that works, and the result is reduced by gcd(P, Q).
 */
inline RationalQ rational_reconstruct(const QSeries& s, int max_deg) {
    if (max_deg < 0) throw std::invalid_argument("rational_reconstruct: negative degree bound");
    const int N = s.order();
    if (N < 2 * max_deg + 1)
        throw InsufficientCoefficients("rational_reconstruct: need at least " + std::to_string(2 * max_deg + 2) +
                                       " coefficients, got " + std::to_string(N + 1));
    for (int dq = 0; dq <= max_deg; ++dq) {
        // Unknowns b_1..b_dq of Q = 1 + sum b_j q^j; conditions (Q s)_k = 0 for max_deg < k <= N.
        const int rows = N - max_deg;
        std::vector<Scalar> b;
        bool ok = true;
        if (dq > 0) {
            Matrix<Scalar> A(static_cast<std::size_t>(rows), static_cast<std::size_t>(dq), Scalar());
            std::vector<Scalar> rhs(static_cast<std::size_t>(rows));
            for (int r = 0; r < rows; ++r) {
                int k = max_deg + 1 + r;
                for (int j = 1; j <= dq; ++j) A(static_cast<std::size_t>(r), static_cast<std::size_t>(j - 1)) = s.coeff(k - j);
                rhs[static_cast<std::size_t>(r)] = -s.coeff(k);
            }
            ok = solve_any(A, rhs, b);
        } else {
            for (int k = max_deg + 1; k <= N && ok; ++k) ok = is_zero(s[k]);
        }
        if (!ok) continue;
        std::vector<Scalar> qc{Scalar(1)};
        qc.insert(qc.end(), b.begin(), b.end());
        UniPoly<Scalar> Q(qc);
        std::vector<Scalar> pc(static_cast<std::size_t>(max_deg + 1));
        for (int k = 0; k <= max_deg; ++k) {
            Scalar acc;
            for (int j = 0; j <= std::min(k, dq); ++j) acc = acc + qc[static_cast<std::size_t>(j)] * s[k - j];
            pc[static_cast<std::size_t>(k)] = acc;
        }
        UniPoly<Scalar> P(pc);
        UniPoly<Scalar> g = poly_gcd(P, Q);
        if (!P.is_zero() && g.degree() > 0) {
            P = divmod(P, g).first;
            Q = divmod(Q, g).first;
        } else if (P.is_zero()) {
            Q = UniPoly<Scalar>(Scalar(1));
        }
        Scalar q0inv = Scalar(1) / Q.coeff(0);
        return RationalQ{UniPoly<Scalar>(q0inv) * P, UniPoly<Scalar>(q0inv) * Q};
    }
    throw NoRationalForm("rational_reconstruct: no rational form with degrees <= " + std::to_string(max_deg));
}

}  // namespace hilbgw
