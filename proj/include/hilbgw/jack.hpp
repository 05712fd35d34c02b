/**
 * @file jack.hpp
 * @brief Jack symmetric functions in integral form and the fixed-point basis
 *        J^lambda of the level-n Fock space.
 *
 * Symmetric functions of degree n are stored by their coordinates in the
 * power-sum basis p_rho, rho in reverse-lex order. Under alpha_{-k} <-> p_k
 * one has p_rho = z(rho) |rho>.
 *
 * J_lambda is built by Gram-Schmidt on monomial functions (in increasing
 * reverse-lex order, a linear extension of dominance) for the pairing
 * <p_rho, p_sigma> = delta z(rho) alpha^{l(rho)}, then scaled so that the
 * coefficient of m_{1^n} is n!. The fixed-point class is
 *   J^lambda = t2^n sum_rho t1^{l(rho)} [p_rho] J_lambda|_{alpha = -t1/t2} p_rho.
 * With this normalization the |1^n> coefficient of J^lambda is n!(t1 t2)^n
 * times [p_{1^n}] J_lambda, and eta(J^lambda, J^lambda) is the product of the
 * tangent weights at lambda.
 */
#pragma once

#include "fock.hpp"
#include "matrix.hpp"
#include "partitions.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace hilbgw {

/**
 * @brief Matrix L with p_rho = sum_lambda L[rho][lambda] m_lambda.
 *
 * L[rho][lambda] counts the ways to distribute the parts of rho into l(lambda)
 * labelled bins with bin sums lambda_1, lambda_2, ...
 */
inline Matrix<Rational> power_to_monomial(int n) {
    auto parts = enumerate_partitions(n);
    const std::size_t d = parts.size();
    Matrix<Rational> L(d, d, Rational(0));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            const auto& rho = parts[r].parts();
            const auto& lam = parts[c].parts();
            std::map<std::vector<int>, mpz_class> states{{std::vector<int>(lam.size(), 0), 1}};
            for (int x : rho) {
                std::map<std::vector<int>, mpz_class> next;
                for (auto& [s, cnt] : states)
                    for (std::size_t b = 0; b < lam.size(); ++b)
                        if (s[b] + x <= lam[b]) {
                            auto t = s;
                            t[b] += x;
                            next[t] += cnt;
                        }
                states = std::move(next);
            }
            auto it = states.find(lam);
            L(r, c) = it == states.end() ? Rational(0) : Rational(it->second);
        }
    return L;
}

/** @brief Power-sum coordinates of m_lambda: row lambda of the inverse of power_to_monomial. */
inline Matrix<Rational> monomial_to_power(int n) {
    auto L = power_to_monomial(n);
    return inverse(L, Rational(0), Rational(1));
}

/** @brief Power-sum coordinates of the Schur function s_mu: chi_mu(rho) / z(rho). */
inline std::vector<Rational> schur_power_coordinates(const Partition& mu) {
    std::vector<Rational> v;
    for (const auto& rho : enumerate_partitions(mu.size())) v.push_back(character(mu, rho) / z_factor(rho));
    return v;
}

/** @brief x^e for e >= 0 in a field F. */
template <class F>
F pow_field(const F& x, int e) {
    F r = F(Rational(1));
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

/**
 * @brief Integral-form Jack functions at level n as rows of power-sum coordinates.
 *
 * Row i is J_{lambda_i}, lambda_i the i-th partition in reverse-lex order; the
 * parameter alpha lives in F.
 */
template <class F>
Matrix<F> jack_power_coordinates(int n, const F& alpha) {
    auto parts = enumerate_partitions(n);
    const std::size_t d = parts.size();
    Matrix<Rational> MP = monomial_to_power(n);  // row lambda: m_lambda in p-coordinates
    std::vector<F> weight;                       // <p_rho, p_rho>
    for (const auto& rho : parts) weight.push_back(F(z_factor(rho)) * pow_field(alpha, rho.length()));
    auto pair = [&](const std::vector<F>& a, const std::vector<F>& b) {
        F s = F(Rational(0));
        for (std::size_t k = 0; k < d; ++k)
            if (!is_zero(a[k]) && !is_zero(b[k])) s = s + a[k] * b[k] * weight[k];
        return s;
    };
    // Gram-Schmidt from (1^n) upward, tracking both p-coordinates and m-coordinates.
    std::vector<std::vector<F>> P(d), Pm(d);
    std::vector<F> norms(d, F(Rational(0)));
    for (std::size_t step = 0; step < d; ++step) {
        std::size_t i = d - 1 - step;
        std::vector<F> v(d), vm(d, F(Rational(0)));
        for (std::size_t k = 0; k < d; ++k) v[k] = F(MP(i, k));
        vm[i] = F(Rational(1));
        std::vector<F> base = v;
        for (std::size_t j = i + 1; j < d; ++j) {
            F c = pair(base, P[j]) / norms[j];
            if (is_zero(c)) continue;
            for (std::size_t k = 0; k < d; ++k) {
                v[k] = v[k] - c * P[j][k];
                vm[k] = vm[k] - c * Pm[j][k];
            }
        }
        norms[i] = pair(v, v);
        P[i] = v;
        Pm[i] = vm;
    }
    Matrix<F> J(d, d, F(Rational(0)));
    F nfact = F(factorial(n));
    for (std::size_t i = 0; i < d; ++i) {
        F scale = nfact / Pm[i][d - 1];
        for (std::size_t k = 0; k < d; ++k) J(i, k) = scale * P[i][k];
    }
    return J;
}

/** @brief The fixed-point basis of level n together with its norms and restrictions. */
struct FixedPointBasis {
    int n = 0;
    std::vector<Partition> basis;
    Matrix<Scalar> T;     ///< column lambda = J^lambda in the Nakajima basis
    Matrix<Scalar> Tinv;  ///< inverse transition matrix
    std::vector<Scalar> norms;        ///< eta(J^lambda, J^lambda)
    std::vector<Scalar> eigenvalues;  ///< -c(lambda)

    /** @brief J^lambda as a Fock vector. */
    FockVector<Scalar> vector(std::size_t lambda) const {
        FockVector<Scalar> v;
        for (std::size_t r = 0; r < basis.size(); ++r) fock_add(v, basis[r], T(r, lambda));
        return v;
    }
};

inline FixedPointBasis fixed_point_classes(int n) {
    if (n < 1) throw std::invalid_argument("fixed_point_classes: n must be positive");
    FixedPointBasis fp;
    fp.n = n;
    fp.basis = enumerate_partitions(n);
    const std::size_t d = fp.basis.size();
    const Scalar t1 = Scalar::t1(), t2 = Scalar::t2();
    Matrix<Scalar> J = jack_power_coordinates<Scalar>(n, -t1 / t2);
    fp.T = Matrix<Scalar>(d, d, Scalar());
    Scalar t2n = t2.pow(n);
    for (std::size_t lam = 0; lam < d; ++lam)
        for (std::size_t r = 0; r < d; ++r) {
            const Partition& rho = fp.basis[r];
            fp.T(r, lam) = t2n * t1.pow(rho.length()) * Scalar(z_factor(rho)) * J(lam, r);
        }
    fp.Tinv = inverse(fp.T, Scalar(), Scalar(1));
    for (std::size_t lam = 0; lam < d; ++lam) {
        Scalar s;
        for (std::size_t r = 0; r < d; ++r) s += fp.T(r, lam) * fp.T(r, lam) * eta_diagonal(fp.basis[r]);
        fp.norms.push_back(s);
        fp.eigenvalues.push_back(-content_sum(fp.basis[lam]));
    }
    return fp;
}

/** @brief mu|_eta: restriction of the Nakajima class |mu> to the fixed point eta. */
inline Scalar restriction(const FixedPointBasis& fp, const Partition& mu, const Partition& eta) {
    if (mu.size() != eta.size() || mu.size() != fp.n) throw std::invalid_argument("restriction: size mismatch");
    std::size_t m = partition_index(fp.basis, mu), e = partition_index(fp.basis, eta);
    return fp.Tinv(e, m) * tangent_euler(eta);
}

}  // namespace hilbgw
