/**
 * @file frobenius.hpp
 * @brief The small quantum ring of Hilb^n at the origin as a Frobenius
 *        algebra over F[[q]]: eigen-data of M_D, unnormalized idempotents,
 *        their norms and TQFT correlators.
 *
 * Eigenvectors are found by Rayleigh-Schroedinger perturbation in the
 * fixed-point basis, where A = T^{-1} M_D T has the diagonal constant term
 * diag(-c(lambda)). With the normalization that the lambda-coordinate of the
 * eigenvector x stays 1, the order-k corrections are
 *   v_k = sum_{j=1..k} (A_j x_{k-j})_lambda,
 *   (c_lambda - c_mu) (x_k)_mu = -sum_{j=1..k} (A_j x_{k-j})_mu + sum_{j=1..k-1} v_j (x_{k-j})_mu.
 * Then psi_lambda = T x is column lambda of Psi_un, so Psi_un(0) = T.
 *
 * The unit decomposes as |1^n> = sum_lambda a_lambda psi_lambda, the
 * idempotents are eps_lambda = a_lambda psi_lambda, and
 * Delta_lambda = 1 / eta(eps_lambda, eps_lambda).
 */
#pragma once

#include "field.hpp"
#include "fock.hpp"
#include "jack.hpp"
#include "matrix.hpp"
#include "series.hpp"

#include <stdexcept>
#include <vector>

namespace hilbgw {

template <class F>
using SeriesMatrix = Matrix<Series<F>>;

/** @brief Matrix of q^j coefficients of a series matrix. */
template <class F>
Matrix<F> coefficient_matrix(const SeriesMatrix<F>& M, int j) {
    Matrix<F> C(M.rows(), M.cols(), F(Rational(0)));
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) C(r, c) = M(r, c).coeff(j);
    return C;
}

/** @brief Constant series matrix from a field matrix. */
template <class F>
SeriesMatrix<F> constant_series_matrix(const Matrix<F>& C, int order) {
    SeriesMatrix<F> M(C.rows(), C.cols(), Series<F>(order));
    for (std::size_t r = 0; r < C.rows(); ++r)
        for (std::size_t c = 0; c < C.cols(); ++c) M(r, c) = Series<F>(C(r, c), order);
    return M;
}

/** @brief Entrywise q d/dq. */
template <class F>
SeriesMatrix<F> euler_derivative(const SeriesMatrix<F>& M) {
    SeriesMatrix<F> R = M;
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) R(r, c) = M(r, c).euler_derivative();
    return R;
}

template <class F>
SeriesMatrix<F> series_identity(std::size_t d, int order) {
    return SeriesMatrix<F>::identity(d, Series<F>(order), Series<F>(F(Rational(1)), order));
}

template <class F>
SeriesMatrix<F> series_inverse(const SeriesMatrix<F>& M, int order) {
    return inverse(M, Series<F>(order), Series<F>(F(Rational(1)), order));
}

template <class F>
SeriesMatrix<F> series_diagonal(const std::vector<Series<F>>& d, int order) {
    return SeriesMatrix<F>::diagonal(d, Series<F>(order));
}

/** @brief Eigen-data of M_D at level n over F[[q]]. */
template <class F>
struct EigenData {
    int n = 0;
    int order = 0;
    std::vector<Partition> basis;
    std::vector<F> gram;          ///< diagonal of eta in the Nakajima basis
    std::vector<F> fixed_norms;   ///< eta(J^lambda, J^lambda)
    Matrix<F> T, Tinv;            ///< fixed-point transition matrix and inverse
    SeriesMatrix<F> M;            ///< M_D
    SeriesMatrix<F> Psi, PsiInv;  ///< unnormalized idempotent directions (columns) and inverse
    std::vector<Series<F>> v;     ///< eigenvalues v(lambda; q)
    std::vector<Series<F>> a;     ///< unit coordinates: |1^n> = sum a_lambda psi_lambda
    std::vector<Series<F>> Delta; ///< 1 / eta(eps_lambda, eps_lambda)

    std::size_t dim() const { return basis.size(); }

    /** @brief Idempotent eps_lambda as a coordinate vector in the Nakajima basis. */
    std::vector<Series<F>> idempotent(std::size_t lambda) const {
        std::vector<Series<F>> e = Psi.column(lambda);
        for (auto& x : e) x = a[lambda] * x;
        return e;
    }
    /** @brief Matrix P = Psi diag(a) whose columns are the idempotents. */
    SeriesMatrix<F> idempotent_matrix() const { return Psi * series_diagonal(a, order); }
    /** @brief Coordinates of a Nakajima vector in the idempotent basis. */
    std::vector<Series<F>> idempotent_coordinates(const std::vector<Series<F>>& x) const {
        std::vector<Series<F>> y = PsiInv * x;
        for (std::size_t l = 0; l < y.size(); ++l) y[l] = y[l] / a[l];
        return y;
    }
    /** @brief eta(x, y) for coordinate vectors in the Nakajima basis. */
    Series<F> eta(const std::vector<Series<F>>& x, const std::vector<Series<F>>& y) const {
        Series<F> s(order);
        for (std::size_t r = 0; r < x.size(); ++r) s += gram[r] * (x[r] * y[r]);
        return s;
    }
};

/**
 * @brief Eigen-decomposition of M_D (with q rescaled by qscale) to q-order N,
 *        with constants embedded into F by embed.
 */
template <class F, class Embed>
EigenData<F> eigen_decompose(int n, int order, const Embed& embed, const F& qscale) {
    if (order < 0) throw std::invalid_argument("eigen_decompose: negative order");
    FixedPointBasis fp = fixed_point_classes(n);
    EigenData<F> E;
    E.n = n;
    E.order = order;
    E.basis = fp.basis;
    const std::size_t d = E.basis.size();
    for (const auto& mu : E.basis) E.gram.push_back(embed(eta_diagonal(mu)));
    for (const auto& x : fp.norms) E.fixed_norms.push_back(embed(x));
    E.T = fp.T.template map<F>(embed);
    E.Tinv = fp.Tinv.template map<F>(embed);
    E.M = build_MD<F>(n, order, embed, qscale);

    std::vector<Matrix<F>> A;
    for (int j = 0; j <= order; ++j) A.push_back(E.Tinv * coefficient_matrix(E.M, j) * E.T);
    std::vector<F> c0(d);
    for (std::size_t l = 0; l < d; ++l) {
        c0[l] = -A[0](l, l);
        for (std::size_t m = 0; m < d; ++m)
            if (m != l && !is_zero(A[0](m, l))) throw std::logic_error("eigen_decompose: fixed-point basis does not diagonalize M_D(0)");
    }
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < l; ++m)
            if (is_zero(c0[l] - c0[m])) throw std::domain_error("eigen_decompose: resonant eigenvalues at q = 0");

    E.Psi = SeriesMatrix<F>(d, d, Series<F>(order));
    for (std::size_t l = 0; l < d; ++l) {
        std::vector<std::vector<F>> x(static_cast<std::size_t>(order) + 1, std::vector<F>(d, F(Rational(0))));
        std::vector<F> v(static_cast<std::size_t>(order) + 1, F(Rational(0)));
        x[0][l] = F(Rational(1));
        v[0] = -c0[l];
        for (int k = 1; k <= order; ++k) {
            std::vector<F> rhs(d, F(Rational(0)));  // sum_{j=1..k} A_j x_{k-j}
            for (int j = 1; j <= k; ++j) {
                auto y = A[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(k - j)];
                for (std::size_t m = 0; m < d; ++m) rhs[m] = rhs[m] + y[m];
            }
            v[static_cast<std::size_t>(k)] = rhs[l];
            for (std::size_t m = 0; m < d; ++m) {
                if (m == l) continue;
                F acc = -rhs[m];
                for (int j = 1; j < k; ++j) acc = acc + v[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(k - j)][m];
                x[static_cast<std::size_t>(k)][m] = acc / (c0[l] - c0[m]);
            }
        }
        E.v.emplace_back(v);
        for (int k = 0; k <= order; ++k) {
            auto col = E.T * x[static_cast<std::size_t>(k)];
            for (std::size_t r = 0; r < d; ++r) E.Psi(r, l)[k] = col[r];
        }
    }
    E.PsiInv = series_inverse(E.Psi, order);
    std::vector<Series<F>> unit(d, Series<F>(order));
    unit[d - 1] = Series<F>(F(Rational(1)), order);  // |1^n> is last in reverse-lex order
    E.a = E.PsiInv * unit;
    for (std::size_t l = 0; l < d; ++l) {
        auto col = E.Psi.column(l);
        E.Delta.push_back((E.a[l] * E.a[l] * E.eta(col, col)).inverse());
    }
    return E;
}

inline EigenData<Scalar> eigen_decompose(int n, int order) {
    return eigen_decompose<Scalar>(n, order, ScalarEmbedding{}, Scalar(1));
}

/**
 * @brief The operator of quantum multiplication by x (Nakajima coordinates),
 *        from the expansion x = sum_k c_k M_D^k |1^n>.
 */
template <class F>
SeriesMatrix<F> quantum_mult_operator(const std::vector<Series<F>>& x, const EigenData<F>& E) {
    const std::size_t d = E.dim();
    SeriesMatrix<F> K(d, d, Series<F>(E.order));
    std::vector<Series<F>> col(d, Series<F>(E.order));
    col[d - 1] = Series<F>(F(Rational(1)), E.order);
    std::vector<SeriesMatrix<F>> powers{series_identity<F>(d, E.order)};
    for (std::size_t k = 0; k < d; ++k) {
        K.set_column(k, col);
        col = E.M * col;
        if (k + 1 < d) powers.push_back(powers.back() * E.M);
    }
    SeriesMatrix<F> rhs(d, 1, Series<F>(E.order));
    rhs.set_column(0, x);
    SeriesMatrix<F> c;
    try {
        c = solve(K, rhs);
    } catch (const std::domain_error&) {
        throw std::domain_error("quantum_mult_operator: powers of M_D do not span at this order");
    }
    SeriesMatrix<F> op(d, d, Series<F>(E.order));
    for (std::size_t k = 0; k < d; ++k) op = op + c(k, 0) * powers[k];
    return op;
}

/** @brief Quantum multiplication by x via the idempotent decomposition (independent route). */
template <class F>
SeriesMatrix<F> quantum_mult_operator_idempotent(const std::vector<Series<F>>& x, const EigenData<F>& E) {
    auto P = E.idempotent_matrix();
    auto y = E.idempotent_coordinates(x);
    return P * series_diagonal(y, E.order) * series_inverse(P, E.order);
}

/** @brief x * y in the quantum ring, both in Nakajima coordinates. */
template <class F>
std::vector<Series<F>> quantum_product(const std::vector<Series<F>>& x, const std::vector<Series<F>>& y, const EigenData<F>& E) {
    auto xi = E.idempotent_coordinates(x), yi = E.idempotent_coordinates(y);
    std::vector<Series<F>> prod(E.dim(), Series<F>(E.order));
    for (std::size_t l = 0; l < E.dim(); ++l) {
        auto e = E.idempotent(l);
        Series<F> c = xi[l] * yi[l];
        for (std::size_t r = 0; r < E.dim(); ++r) prod[r] += c * e[r];
    }
    return prod;
}

/**
 * @brief omega_{g,r}(x_1, ..., x_r) = sum_lambda prod_i [eps_lambda-coordinate of x_i] Delta_lambda^{g-1}.
 */
template <class F>
Series<F> tqft_correlator(int g, const std::vector<std::vector<Series<F>>>& insertions, const EigenData<F>& E) {
    if (2 * g - 2 + static_cast<int>(insertions.size()) <= 0) throw std::invalid_argument("tqft_correlator: unstable (g, r)");
    std::vector<std::vector<Series<F>>> coords;
    for (const auto& x : insertions) coords.push_back(E.idempotent_coordinates(x));
    Series<F> total(E.order);
    for (std::size_t l = 0; l < E.dim(); ++l) {
        Series<F> term(F(Rational(1)), E.order);
        for (const auto& c : coords) term *= c[l];
        Series<F> w(F(Rational(1)), E.order);
        for (int k = 0; k < g - 1; ++k) w *= E.Delta[l];
        if (g == 0) w = E.Delta[l].inverse();
        total += term * w;
    }
    return total;
}

/** @brief Nakajima coordinate vector of |mu> as constant series. */
template <class F>
std::vector<Series<F>> nakajima_coordinates(const EigenData<F>& E, const Partition& mu) {
    std::vector<Series<F>> x(E.dim(), Series<F>(E.order));
    x[partition_index(E.basis, mu)] = Series<F>(F(Rational(1)), E.order);
    return x;
}

}  // namespace hilbgw
