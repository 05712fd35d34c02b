/**
 * @file fock.hpp
 * @brief Fock-space model of the cohomology of Hilbert schemes of points:
 *        Heisenberg operators, pairings and the divisor operator M_D.
 *
 * The Nakajima basis vector |mu> is (1/z(mu)) prod_i alpha_{-mu_i} v_0, which
 * gives
 *   alpha_{-k}|mu> = k (m_k(mu) + 1) |mu + k>,   alpha_k|mu> = |mu - k>  (k > 0),
 * where mu + k adds a part k, mu - k removes one (zero if absent).
 *
 * M_D is
 *   (t1+t2) sum_k (k/2) f_k(q) alpha_{-k} alpha_k - ((t1+t2)/2) f_1(q) |.|
 *   + (1/2) sum_{k,l} [t1 t2 alpha_{k+l} alpha_{-k} alpha_{-l} - alpha_{-k-l} alpha_k alpha_l]
 * with f_k(q) = ((-q)^k + 1)/((-q)^k - 1) = -1 - 2 sum_{j>=1} (-q)^{jk}.
 */
#pragma once

#include "field.hpp"
#include "matrix.hpp"
#include "partitions.hpp"
#include "series.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace hilbgw {

/** @brief A finite linear combination of Nakajima basis vectors. */
template <class T>
using FockVector = std::map<Partition, T>;

/** @brief Add c * |mu> to v, pruning zeros. */
template <class T>
void fock_add(FockVector<T>& v, const Partition& mu, const T& c) {
    if (is_zero(c)) return;
    auto it = v.find(mu);
    if (it == v.end()) {
        v.emplace(mu, c);
        return;
    }
    it->second = it->second + c;
    if (is_zero(it->second)) v.erase(it);
}

/** @brief Apply the Heisenberg operator alpha_k (k != 0). */
template <class T>
FockVector<T> alpha_apply(int k, const FockVector<T>& v) {
    if (k == 0) throw std::invalid_argument("alpha_apply: k must be nonzero");
    FockVector<T> out;
    for (const auto& [mu, c] : v) {
        if (k < 0) {
            int kk = -k;
            fock_add(out, mu.add_part(kk), T(Rational(static_cast<long>(kk) * (mu.multiplicity(kk) + 1))) * c);
        } else if (mu.multiplicity(k) > 0) {
            fock_add(out, mu.remove_part(k), c);
        }
    }
    return out;
}

/** @brief Basis vector |mu> with coefficient 1. */
template <class T>
FockVector<T> basis_vector(const Partition& mu) {
    return FockVector<T>{{mu, T(Rational(1))}};
}

/** @brief eta(mu, mu) = (-1)^{|mu|-l(mu)} / ((t1 t2)^{l(mu)} z(mu)). */
inline Scalar eta_diagonal(const Partition& mu) {
    Scalar tt = Scalar::t1() * Scalar::t2();
    Scalar v = Scalar(Rational(1) / z_factor(mu)) / tt.pow(mu.length());
    return (mu.size() - mu.length()) % 2 ? -v : v;
}
/** @brief The sign-free pairing eta~(mu, mu) = 1 / ((t1 t2)^{l(mu)} z(mu)). */
inline Scalar eta_tilde_diagonal(const Partition& mu) {
    return Scalar(Rational(1) / z_factor(mu)) / (Scalar::t1() * Scalar::t2()).pow(mu.length());
}

inline Scalar pairing_eta(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("pairing_eta: size mismatch");
    return mu == nu ? eta_diagonal(mu) : Scalar();
}
inline Scalar pairing_eta_tilde(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("pairing_eta_tilde: size mismatch");
    return mu == nu ? eta_tilde_diagonal(mu) : Scalar();
}

/** @brief Bilinear extension of eta to Fock vectors with Scalar coefficients. */
inline Scalar pairing_eta(const FockVector<Scalar>& f, const FockVector<Scalar>& g) {
    Scalar s;
    for (const auto& [mu, c] : f)
        if (auto it = g.find(mu); it != g.end()) s += c * it->second * eta_diagonal(mu);
    return s;
}

/** @brief Sesquilinear pairing sum f_mu conj(g_mu) eta~(mu,mu), with conj(t_i) = -t_i. */
inline Scalar pairing_hermitian(const FockVector<Scalar>& f, const FockVector<Scalar>& g) {
    Scalar s;
    for (const auto& [mu, c] : f)
        if (auto it = g.find(mu); it != g.end()) s += c * it->second.conj() * eta_tilde_diagonal(mu);
    return s;
}

/**
 * @brief Verify eta(alpha_k f, g) = eta(f, alpha_k^* g) with
 *        alpha_k^* = (-1)^{k-1} (t1 t2)^{sgn k} alpha_{-k}, on all basis pairs with levels <= max_level.
 */
inline bool adjoint_check(int k, int max_level = 4) {
    if (k == 0) throw std::invalid_argument("adjoint_check: k must be nonzero");
    Scalar tt = Scalar::t1() * Scalar::t2();
    Scalar factor = (k > 0 ? tt : tt.inverse());
    if ((k - 1) % 2 != 0) factor = -factor;
    for (int m = 0; m <= max_level; ++m) {
        int target = m - k;
        if (target < 0 || target > max_level) continue;
        for (const auto& mu : enumerate_partitions(m))
            for (const auto& nu : enumerate_partitions(target)) {
                auto f = basis_vector<Scalar>(mu);
                auto g = basis_vector<Scalar>(nu);
                Scalar lhs = pairing_eta(alpha_apply(k, f), g);
                FockVector<Scalar> ag;
                for (auto& [p, c] : alpha_apply(-k, g)) ag[p] = factor * c;
                if (lhs != pairing_eta(f, ag)) return false;
            }
    }
    return true;
}

/** @brief The q-independent parts of M_D on level n, as rational coefficient matrices (rows/cols in partition order). */
struct MDParts {
    std::vector<Partition> basis;
    std::vector<std::vector<Rational>> split;  ///< sum_{k,l} alpha_{k+l} alpha_{-k} alpha_{-l}, entry [row][col]
    std::vector<std::vector<Rational>> join;   ///< sum_{k,l} alpha_{-k-l} alpha_k alpha_l
};

inline MDParts md_parts(int n) {
    MDParts p;
    p.basis = enumerate_partitions(n);
    const std::size_t d = p.basis.size();
    p.split.assign(d, std::vector<Rational>(d, Rational(0)));
    p.join.assign(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t c = 0; c < d; ++c) {
        auto v = basis_vector<Rational>(p.basis[c]);
        for (int k = 1; k < n; ++k)
            for (int l = 1; k + l <= n; ++l) {
                auto s = alpha_apply(k + l, alpha_apply(-k, alpha_apply(-l, v)));
                for (auto& [mu, x] : s) p.split[partition_index(p.basis, mu)][c] += x;
                auto j = alpha_apply(-k - l, alpha_apply(k, alpha_apply(l, v)));
                for (auto& [mu, x] : j) p.join[partition_index(p.basis, mu)][c] += x;
            }
    }
    return p;
}

/**
 * @brief f_k(q) = -1 - 2 sum_{j>=1} (-c q)^{jk} to order N, where c rescales q
 *        (c = 1 for the operator itself).
 */
template <class F>
Series<F> md_f_series(int k, int order, const F& qscale) {
    Series<F> f(F(Rational(-1)), order);
    F base = -qscale;
    F p = F(Rational(1));
    for (int i = 1; i <= order; ++i) {
        p = p * base;
        if (i % k == 0) f[i] = F(Rational(-2)) * p;
    }
    return f;
}

/**
 * @brief Matrix of M_D on level n in the Nakajima basis with entries in F[[q]] to order N.
 *
 * @param embed maps Scalar constants into F; @param qscale substitutes q -> qscale * q.
 */
template <class F, class Embed>
Matrix<Series<F>> build_MD(int n, int order, const Embed& embed, const F& qscale) {
    if (n < 1) throw std::invalid_argument("build_MD: n must be positive");
    MDParts parts = md_parts(n);
    const std::size_t d = parts.basis.size();
    const Scalar t1 = Scalar::t1(), t2 = Scalar::t2();
    const F half_sum = embed((t1 + t2) / Scalar(2));
    const F half_prod = embed(t1 * t2 / Scalar(2));
    const F minus_half = F(Rational(-1, 2));
    Matrix<Series<F>> M(d, d, Series<F>(order));
    std::vector<Series<F>> fk;
    for (int k = 1; k <= n; ++k) fk.push_back(md_f_series<F>(k, order, qscale));
    for (std::size_t c = 0; c < d; ++c) {
        const Partition& mu = parts.basis[c];
        Series<F> diag(order);
        for (int part : mu.parts()) diag += F(Rational(static_cast<long>(part) * part)) * fk[static_cast<std::size_t>(part - 1)];
        diag -= F(Rational(n)) * fk[0];
        M(c, c) = half_sum * diag;
        for (std::size_t r = 0; r < d; ++r) {
            F x = half_prod * F(parts.split[r][c]) + minus_half * F(parts.join[r][c]);
            if (!is_zero(x)) M(r, c) = M(r, c) + Series<F>(x, order);
        }
    }
    return M;
}

/** @brief M_D over Q(t1,t2)[[q]]. */
inline Matrix<QSeries> build_MD(int n, int order) {
    return build_MD<Scalar>(n, order, ScalarEmbedding{}, Scalar(1));
}

/** @brief Diagonal Gram matrix of eta on level n in partition order. */
inline std::vector<Scalar> eta_gram(int n) {
    std::vector<Scalar> g;
    for (const auto& mu : enumerate_partitions(n)) g.push_back(eta_diagonal(mu));
    return g;
}

/** @brief sum_d <mu1, (2), mu2>_{0,d} q^d = eta(|mu1>, -M_D |mu2>). */
inline QSeries three_point_series(const Partition& mu1, const Partition& mu2, int order) {
    if (mu1.size() != mu2.size()) throw std::invalid_argument("three_point_series: size mismatch");
    auto basis = enumerate_partitions(mu1.size());
    auto M = build_MD(mu1.size(), order);
    std::size_t r = partition_index(basis, mu1), c = partition_index(basis, mu2);
    return Scalar(-1) * eta_diagonal(mu1) * M(r, c);
}

}  // namespace hilbgw
