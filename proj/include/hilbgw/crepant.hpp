/**
 * @file crepant.hpp
 * @brief Closed-form boundary data of the Sym^n(C^2) side and the crepant
 *        comparison: character idempotents, the u = 0 R-matrix, the rescaling
 *        |mu~> = (-i)^{l(mu)-|mu|} |mu>, and the substitution -q = e^{iu}.
 *
 * Square roots (t1 t2)^{l/2} are powers of the formal root s with s^2 = t1 t2
 * (the positive branch); i and s live in ExtScalar and never leave this module
 * unprojected.
 */
#pragma once

#include "bernoulli.hpp"
#include "ext_scalar.hpp"
#include "fock.hpp"
#include "partitions.hpp"
#include "reconstruct.hpp"
#include "rmatrix.hpp"
#include "series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hilbgw {

using ExtSeries = Series<ExtScalar>;

/** @brief exp(-sum_m B_{2m}/(2m(2m-1)) sum_i (1/(mu_i t1)^{2m-1} + 1/(mu_i t2)^{2m-1}) z^{2m-1}) to z-order K. */
inline Series<Scalar> sym_R_u0_entry(const Partition& mu, int K) {
    const Scalar t1 = Scalar::t1(), t2 = Scalar::t2();
    Series<Scalar> s(K);
    for (int m = 1; 2 * m - 1 <= K; ++m) {
        Scalar inner;
        for (int p : mu.parts()) inner += (Scalar(p) * t1).pow(-(2 * m - 1)) + (Scalar(p) * t2).pow(-(2 * m - 1));
        s[2 * m - 1] = -Scalar(bernoulli_number(2 * m) / Rational(2L * m * (2 * m - 1))) * inner;
    }
    return series_exp(s);
}

/** @brief The diagonal of R^Sym at u = 0, one z-series per partition in reverse-lex order. */
inline std::vector<Series<Scalar>> sym_R_u0(int n, int K) {
    std::vector<Series<Scalar>> out;
    for (const auto& mu : enumerate_partitions(n)) out.push_back(sym_R_u0_entry(mu, K));
    return out;
}

/**
 * @brief The same diagonal entry from its Bernoulli-polynomial form
 *   exp(sum_{m>1} -1/(m(m-1)) sum_i sum_{l=0}^{mu_i-1} B_m(l/mu_i) z^{m-1} (t1^{1-m} + t2^{1-m})).
 */
inline Series<Scalar> sym_R_u0_entry_bernoulli_polynomial(const Partition& mu, int K) {
    const Scalar t1 = Scalar::t1(), t2 = Scalar::t2();
    Series<Scalar> s(K);
    for (int m = 2; m - 1 <= K; ++m) {
        Rational bsum(0);
        for (int p : mu.parts())
            for (int l = 0; l < p; ++l) bsum += bernoulli_polynomial(m, Rational(l, p));
        s[m - 1] = Scalar(Rational(-1, static_cast<long>(m) * (m - 1)) * bsum) * (t1.pow(1 - m) + t2.pow(1 - m));
    }
    return series_exp(s);
}

/** @brief Coordinates of I^lambda = sum_mu chi_lambda(mu) (t1 t2)^{l(mu)/2} I_mu, one row per lambda. */
inline std::vector<std::vector<ExtScalar>> sym_idempotents(int n) {
    auto parts = enumerate_partitions(n);
    std::vector<std::vector<ExtScalar>> out;
    for (const auto& lam : parts) {
        std::vector<ExtScalar> row;
        for (const auto& mu : parts) row.push_back(ExtScalar(Scalar(character(lam, mu))) * ExtScalar::s().pow(mu.length()));
        out.push_back(std::move(row));
    }
    return out;
}

/** @brief eta~ of two coordinate vectors over the I_mu basis. */
inline ExtScalar sym_pairing(int n, const std::vector<ExtScalar>& x, const std::vector<ExtScalar>& y) {
    auto parts = enumerate_partitions(n);
    ExtScalar s;
    for (std::size_t k = 0; k < parts.size(); ++k) s += x[k] * y[k] * ExtScalar(eta_tilde_diagonal(parts[k]));
    return s;
}

/** @brief The rescaling factor (-i)^{l(mu) - |mu|} of |mu~> = (-i)^{l(mu)-|mu|} |mu>. */
inline ExtScalar mu_tilde_factor(const Partition& mu) {
    return (-ExtScalar::i()).pow(mu.length() - mu.size());
}

/** @brief Whether eta~(mu~, nu~) = eta(mu, nu) for all partitions of n. */
inline bool mu_tilde_transport(int n) {
    for (const auto& mu : enumerate_partitions(n))
        for (const auto& nu : enumerate_partitions(n)) {
            ExtScalar lhs = mu_tilde_factor(mu) * mu_tilde_factor(nu) * ExtScalar(pairing_eta_tilde(mu, nu));
            if (lhs != ExtScalar(pairing_eta(mu, nu))) return false;
        }
    return true;
}

/** @brief Columns R|_{u=0}(I^lambda) in the Nakajima basis of the Hilb side, as z-series per entry [lambda][mu]. */
using AnchorColumns = std::vector<std::vector<ExtSeries>>;

/**
 * @brief R^Sym|_{u=0}(I^lambda) from the diagonal entries, the character
 *        idempotents and the inverse of the rescaling mu -> mu~.
 */
inline AnchorColumns r_sym0_columns(int n, int K) {
    auto parts = enumerate_partitions(n);
    auto I = sym_idempotents(n);
    auto diag = sym_R_u0(n, K);
    AnchorColumns out;
    for (std::size_t l = 0; l < parts.size(); ++l) {
        std::vector<ExtSeries> col;
        for (std::size_t m = 0; m < parts.size(); ++m) {
            ExtScalar coeff = I[l][m] / mu_tilde_factor(parts[m]);
            col.push_back(coeff * diag[m].map<ExtScalar>([](const Scalar& x) { return ExtScalar(x); }));
        }
        out.push_back(std::move(col));
    }
    return out;
}

/**
 * @brief The same columns from the product form
 *   chi_lambda(mu) sqrt(-1)^{l-|mu|} (t1 t2)^{l/2}
 *   prod_i exp(sum_m B_{2m}/(2m(2m-1)) ((-z/(mu_i t1))^{2m-1} + (-z/(mu_i t2))^{2m-1})).
 */
inline AnchorColumns column1_columns(int n, int K) {
    auto parts = enumerate_partitions(n);
    const Scalar t1 = Scalar::t1(), t2 = Scalar::t2();
    AnchorColumns out;
    for (const auto& lam : parts) {
        std::vector<ExtSeries> col;
        for (const auto& mu : parts) {
            Series<Scalar> prod(Scalar(1), K);
            for (int p : mu.parts()) {
                Series<Scalar> e(K);
                for (int m = 1; 2 * m - 1 <= K; ++m) {
                    Scalar w = Scalar(bernoulli_number(2 * m) / Rational(2L * m * (2 * m - 1)));
                    Scalar a = (Scalar(-1) / (Scalar(p) * t1)).pow(2 * m - 1) + (Scalar(-1) / (Scalar(p) * t2)).pow(2 * m - 1);
                    e[2 * m - 1] = w * a;
                }
                prod *= series_exp(e);
            }
            ExtScalar pref = ExtScalar(Scalar(character(lam, mu))) * ExtScalar::i().pow(mu.length() - mu.size()) * ExtScalar::s().pow(mu.length());
            col.push_back(pref * prod.map<ExtScalar>([](const Scalar& x) { return ExtScalar(x); }));
        }
        out.push_back(std::move(col));
    }
    return out;
}

/** @brief Whether the two closed forms of the comparison-point columns agree through z^K. */
inline bool anchor_comparison(int n, int K) {
    auto a = r_sym0_columns(n, K);
    auto b = column1_columns(n, K);
    for (std::size_t l = 0; l < a.size(); ++l)
        for (std::size_t m = 0; m < a[l].size(); ++m)
            if (a[l][m] != b[l][m]) return false;
    return true;
}

/** @brief Outcome of substituting -q = e^{iu} into a reconstructed invariant. */
struct CrepantReport {
    RationalQ rational_form;
    bool pole_at_minus_one = false;
    ExtSeries u_expansion;      ///< the rational form at q = -e^{iu}, in powers of u
    long prefactor_exponent = 0; ///< sum over insertions of l(mu) - |mu|
    ExtSeries prediction;       ///< (-i)^{prefactor_exponent} times u_expansion
};

/** @brief Evaluate a univariate polynomial at a series argument. */
template <class F>
Series<F> evaluate_at_series(const UniPoly<Scalar>& p, const Series<F>& x) {
    Series<F> acc(x.order());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * x;
        acc[0] = acc[0] + F(p.coeff(k));
    }
    return acc;
}

/** @brief Substitute q = -e^{iu} into the rational form and expand to u-order U. */
inline CrepantReport crepant_substitute(const RationalQ& form, const std::vector<Partition>& insertions, int U) {
    CrepantReport rep;
    rep.rational_form = form;
    rep.pole_at_minus_one = form.den.evaluate(Scalar(-1)).is_zero();
    for (const auto& mu : insertions) rep.prefactor_exponent += mu.length() - mu.size();
    if (rep.pole_at_minus_one) return rep;
    // q(u) = -exp(i u)
    ExtSeries iu(U);
    if (U >= 1) iu[1] = ExtScalar::i();
    ExtSeries q = -(series_exp(iu));
    rep.u_expansion = evaluate_at_series(form.num, q) / evaluate_at_series(form.den, q);
    rep.prediction = (-ExtScalar::i()).pow(rep.prefactor_exponent) * rep.u_expansion;
    return rep;
}

/**
 * @brief Round trip: compose the u-expansion with u = -i log(-q) = i sum_k h^k/k
 *        (q = h - 1) and compare with the Taylor expansion of the rational form at q = -1.
 */
inline bool crepant_round_trip(const CrepantReport& rep) {
    if (rep.pole_at_minus_one) return false;
    const int U = rep.u_expansion.order();
    ExtSeries u(U);
    for (int k = 1; k <= U; ++k) u[k] = ExtScalar::i() * ExtScalar(Rational(1, k));
    ExtSeries composed = rep.u_expansion.compose(u);
    Series<Scalar> h = Series<Scalar>::variable(U) - Series<Scalar>(Scalar(1), U);  // q = h - 1
    Series<Scalar> direct = evaluate_at_series(rep.rational_form.num, h) / evaluate_at_series(rep.rational_form.den, h);
    for (int k = 0; k <= U; ++k) {
        if (!composed[k].in_base_field()) return false;
        if (composed[k].project() != direct[k]) return false;
    }
    return true;
}

}  // namespace hilbgw
