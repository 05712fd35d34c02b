/**
 * @file macdonald.hpp
 * @brief Modified Macdonald polynomials H~_mu(q,t) in the Schur basis, with the
 *        formal variables (q, t) carried by (t1, t2) of Scalar.
 *
 * H~_mu is the unique symmetric function with
 *   H~_mu[X(1-q)] in span{s_lambda : lambda >= mu},
 *   H~_mu[X(1-t)] in span{s_lambda : lambda >= mu'},
 *   <H~_mu, s_(n)> = 1,
 * where >= is dominance. Both plethysms are diagonal in the power-sum basis
 * (p_k -> (1 - q^k) p_k), so the conditions form a linear system over Q(q,t).
 */
#pragma once

#include "matrix.hpp"
#include "partitions.hpp"
#include "scalar.hpp"

#include <stdexcept>
#include <vector>

namespace hilbgw {

/** @brief Matrix of f -> f[X(1 - x)] in the Schur basis of degree n: entry (nu, lambda) is the s_nu coefficient of s_lambda[X(1-x)]. */
inline Matrix<Scalar> schur_plethysm_one_minus(int n, const Scalar& x) {
    auto parts = enumerate_partitions(n);
    const std::size_t d = parts.size();
    std::vector<Scalar> factor;
    for (const auto& rho : parts) {
        Scalar f(1);
        for (int k : rho.parts()) f *= Scalar(1) - x.pow(k);
        factor.push_back(f / Scalar(z_factor(rho)));
    }
    Matrix<Scalar> A(d, d, Scalar(0));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Scalar s;
            for (std::size_t r = 0; r < d; ++r) {
                Rational c = character(parts[a], parts[r]) * character(parts[b], parts[r]);
                if (!is_zero(c)) s += Scalar(c) * factor[r];
            }
            A(a, b) = s;
        }
    return A;
}

/**
 * @brief q,t-Kostka coefficients K~_{lambda mu}(q,t) of H~_mu = sum_lambda K~_{lambda mu} s_lambda,
 *        indexed in the order of enumerate_partitions(|mu|).
 */
inline std::vector<Scalar> macdonald_H(const Partition& mu) {
    const int n = mu.size();
    auto parts = enumerate_partitions(n);
    const std::size_t d = parts.size();
    const Partition mu_conj = mu.conjugate();
    auto Aq = schur_plethysm_one_minus(n, Scalar::t1());
    auto At = schur_plethysm_one_minus(n, Scalar::t2());
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    for (std::size_t nu = 0; nu < d; ++nu) {
        if (!dominates(parts[nu], mu)) {
            std::vector<Scalar> r(d);
            for (std::size_t l = 0; l < d; ++l) r[l] = Aq(nu, l);
            rows.push_back(std::move(r));
            rhs.emplace_back(0);
        }
        if (!dominates(parts[nu], mu_conj)) {
            std::vector<Scalar> r(d);
            for (std::size_t l = 0; l < d; ++l) r[l] = At(nu, l);
            rows.push_back(std::move(r));
            rhs.emplace_back(0);
        }
    }
    const std::size_t top = partition_index(parts, Partition{n});
    std::vector<Scalar> norm(d);
    norm[top] = Scalar(1);
    rows.push_back(norm);
    rhs.emplace_back(1);
    Matrix<Scalar> M(rows.size(), d, Scalar(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < d; ++c) M(r, c) = rows[r][c];
    std::vector<Scalar> x;
    if (!solve_any(M, rhs, x)) throw std::logic_error("macdonald_H: inconsistent triangularity system");
    return x;
}

}  // namespace hilbgw
