/**
 * @file rmatrix.hpp
 * @brief The R-matrix of Hilb^n at the origin, solved order by order in z
 *        from the quantum differential equation, and the series solutions Y^lambda.
 *
 * Write Psi = Psi_un for the matrix of unnormalized idempotent directions,
 * V = diag(v) for the eigenvalues and A = Psi^{-1} q d/dq Psi. The normalized
 * frame is Psi_un S with S = diag(Delta^{1/2} a). The R-matrix is stored
 * conjugated, Rt = S R_can S^{-1}, so no square roots occur. Substituting
 * S-fundamental solution = Psi Rt S e^{U/z} (q dU/dq = V) into z q dS/dq = M_D S and using
 * q d/dq log s_lambda = -A_{lambda lambda} gives, at order z^{k+1},
 *   [V, Rt_{k+1}] = A Rt_k + q d/dq Rt_k - Rt_k diag(A) =: B_k.
 * Off-diagonal entries are (Rt_{k+1})_{lm} = (B_k)_{lm} / (v_l - v_m). The
 * diagonal of the order-(k+2) equation reads
 *   q d/dq (Rt_{k+1})_{ll} = -sum_{m != l} A_{lm} (Rt_{k+1})_{ml},
 * which is integrated termwise with constant term taken from the q = 0 anchor
 *   exp(sum_m B_{2m} / (2m(2m-1)) z^{2m-1} N_{2m-1,lambda}).
 * The flat form is R = Psi Rt Psi^{-1}.
 */
#pragma once

#include "bernoulli.hpp"
#include "frobenius.hpp"

#include <stdexcept>
#include <vector>

namespace hilbgw {

/** @brief exp(sum_{2m-1 <= K} B_{2m}/(2m(2m-1)) N_{2m-1,lambda} z^{2m-1}) as a series in z. */
inline Series<Scalar> hilb_anchor(const Partition& lambda, int K) {
    Series<Scalar> s(K);
    for (int m = 1; 2 * m - 1 <= K; ++m)
        s[2 * m - 1] = Scalar(bernoulli_number(2 * m) / Rational(2L * m * (2 * m - 1))) * bernoulli_weight_sum(lambda, m);
    return series_exp(s);
}

/** @brief An R-matrix to z-order K with entries in F[[q]]. */
template <class F>
struct RMatrix {
    int K = 0;
    std::vector<SeriesMatrix<F>> Rt;  ///< Rt_0 .. Rt_K in the conjugated idempotent frame

    /** @brief Flat (Nakajima-basis) coefficients R_k = Psi Rt_k Psi^{-1}. */
    std::vector<SeriesMatrix<F>> flat(const EigenData<F>& E) const {
        std::vector<SeriesMatrix<F>> out;
        for (const auto& X : Rt) out.push_back(E.Psi * X * E.PsiInv);
        return out;
    }
    /** @brief Coefficients in the unnormalized idempotent basis: diag(a)^{-1} Rt_k diag(a). */
    std::vector<SeriesMatrix<F>> idempotent_frame(const EigenData<F>& E) const {
        std::vector<SeriesMatrix<F>> out;
        const std::size_t d = E.dim();
        for (const auto& X : Rt) {
            SeriesMatrix<F> Y = X;
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t m = 0; m < d; ++m) Y(l, m) = X(l, m) * E.a[m] / E.a[l];
            out.push_back(Y);
        }
        return out;
    }
};

/** @brief A = Psi^{-1} q d/dq Psi. */
template <class F>
SeriesMatrix<F> connection_matrix(const EigenData<F>& E) {
    return E.PsiInv * euler_derivative(E.Psi);
}

/**
 * @brief Check the frame identity A_ll + (1/2) q Delta'/Delta + q a'/a = 0 for every lambda.
 */
template <class F>
bool frame_identity_holds(const EigenData<F>& E) {
    auto A = connection_matrix(E);
    for (std::size_t l = 0; l < E.dim(); ++l) {
        Series<F> lhs = A(l, l) + F(Rational(1, 2)) * (E.Delta[l].euler_derivative() / E.Delta[l]) + E.a[l].euler_derivative() / E.a[l];
        if (!lhs.is_zero()) return false;
    }
    return true;
}

/**
 * @brief Solve for the R-matrix to z-order K.
 *
 * @param anchors per-partition z-series whose coefficients fix the q^0
 *        term of each diagonal entry (hilb_anchor embedded into F by default).
 */
template <class F>
RMatrix<F> compute_R(const EigenData<F>& E, int K, const std::vector<Series<F>>& anchors) {
    if (K < 0) throw std::invalid_argument("compute_R: negative z-order");
    const std::size_t d = E.dim();
    const int N = E.order;
    auto A = connection_matrix(E);
    SeriesMatrix<F> diagA(d, d, Series<F>(N));
    for (std::size_t l = 0; l < d; ++l) diagA(l, l) = A(l, l);
    RMatrix<F> R;
    R.K = K;
    R.Rt.push_back(series_identity<F>(d, N));
    for (int k = 0; k < K; ++k) {
        const auto& Rk = R.Rt.back();
        SeriesMatrix<F> B = A * Rk + euler_derivative(Rk) - Rk * diagA;
        for (std::size_t l = 0; l < d; ++l)
            if (!B(l, l).is_zero()) throw std::logic_error("compute_R: diagonal obstruction at z-order " + std::to_string(k + 1));
        SeriesMatrix<F> next(d, d, Series<F>(N));
        for (std::size_t l = 0; l < d; ++l)
            for (std::size_t m = 0; m < d; ++m)
                if (l != m) next(l, m) = B(l, m) / (E.v[l] - E.v[m]);
        for (std::size_t l = 0; l < d; ++l) {
            Series<F> integrand(N);
            for (std::size_t m = 0; m < d; ++m)
                if (m != l) integrand -= A(l, m) * next(m, l);
            if (!is_zero(integrand[0]))
                throw std::logic_error("compute_R: non-integrable diagonal at z-order " + std::to_string(k + 1));
            next(l, l) = integrand.euler_integral(anchors[l].coeff(k + 1));
        }
        R.Rt.push_back(std::move(next));
    }
    return R;
}

/** @brief Default anchors: the closed q = 0 diagonal, embedded into F. */
template <class F, class Embed>
std::vector<Series<F>> default_anchors(const EigenData<F>& E, int K, const Embed& embed) {
    std::vector<Series<F>> out;
    for (const auto& lam : E.basis) out.push_back(hilb_anchor(lam, K).template map<F>(embed));
    return out;
}

inline RMatrix<Scalar> compute_R(const EigenData<Scalar>& E, int K) {
    return compute_R(E, K, default_anchors(E, K, ScalarEmbedding{}));
}

/** @brief R^dagger = G^{-1} R^T G for the diagonal Gram matrix G of eta. */
template <class F>
SeriesMatrix<F> eta_adjoint(const SeriesMatrix<F>& X, const std::vector<F>& gram) {
    SeriesMatrix<F> Y = X.transpose();
    for (std::size_t r = 0; r < Y.rows(); ++r)
        for (std::size_t c = 0; c < Y.cols(); ++c) Y(r, c) = (gram[c] / gram[r]) * Y(r, c);
    return Y;
}

/** @brief Verify R^dagger(-z) R(z) = 1 through z^K on the flat form. */
template <class F>
bool symplectic_check(const RMatrix<F>& R, const EigenData<F>& E) {
    auto flat = R.flat(E);
    std::vector<SeriesMatrix<F>> dag;
    for (const auto& X : flat) dag.push_back(eta_adjoint(X, E.gram));
    const std::size_t d = E.dim();
    for (int k = 0; k <= R.K; ++k) {
        SeriesMatrix<F> S(d, d, Series<F>(E.order));
        for (int i = 0; i <= k; ++i) {
            auto term = dag[static_cast<std::size_t>(i)] * flat[static_cast<std::size_t>(k - i)];
            S = (i % 2) ? S - term : S + term;
        }
        if (k == 0) S = S - series_identity<F>(d, E.order);
        if (!S.is_zero_matrix()) return false;
    }
    return true;
}

/**
 * @brief QDE residual at every z-order 0..K:
 *   q d/dq (Psi Rt_{k-1}) - Psi Rt_{k-1} diag(A) + Psi Rt_k V - M_D Psi Rt_k.
 */
template <class F>
bool qde_residual_vanishes(const RMatrix<F>& R, const EigenData<F>& E) {
    const std::size_t d = E.dim();
    auto A = connection_matrix(E);
    SeriesMatrix<F> diagA(d, d, Series<F>(E.order));
    for (std::size_t l = 0; l < d; ++l) diagA(l, l) = A(l, l);
    auto V = series_diagonal(E.v, E.order);
    for (int k = 0; k <= R.K; ++k) {
        SeriesMatrix<F> PR = E.Psi * R.Rt[static_cast<std::size_t>(k)];
        SeriesMatrix<F> res = PR * V - E.M * PR;
        if (k > 0) {
            SeriesMatrix<F> prev = E.Psi * R.Rt[static_cast<std::size_t>(k - 1)];
            res = res + euler_derivative(prev) - prev * diagA;
        }
        if (!res.is_zero_matrix()) return false;
    }
    return true;
}

/** @brief Whether the q = 0 slice of Rt is diagonal and matches the anchors through z^K. */
template <class F>
bool anchor_check(const RMatrix<F>& R, const std::vector<Series<F>>& anchors) {
    for (int k = 0; k <= R.K; ++k) {
        const auto& X = R.Rt[static_cast<std::size_t>(k)];
        for (std::size_t l = 0; l < X.rows(); ++l)
            for (std::size_t m = 0; m < X.cols(); ++m) {
                F expect = l == m ? anchors[l].coeff(k) : F(Rational(0));
                if (!(X(l, m)[0] == expect)) return false;
            }
    }
    return true;
}

/**
 * @brief Check that R is compatible with q -> c q for a formal unit c: the
 *        recursion re-run over Q(t1,t2)[c] with M_D(cq) equals R with every
 *        q^j coefficient multiplied by c^j.
 */
inline bool divisor_consistency(int n, int K, int N) {
    auto Es = eigen_decompose(n, N);
    auto Rs = compute_R(Es, K);
    CPoly c = CPoly::variable();
    auto Ec = eigen_decompose<CPoly>(n, N, FormalUnitEmbedding{}, c);
    auto Rc = compute_R(Ec, K, default_anchors(Ec, K, FormalUnitEmbedding{}));
    auto fs = Rs.flat(Es);
    auto fc = Rc.flat(Ec);
    for (int k = 0; k <= K; ++k)
        for (std::size_t r = 0; r < Es.dim(); ++r)
            for (std::size_t col = 0; col < Es.dim(); ++col) {
                CPoly cj(Scalar(1));
                for (int j = 0; j <= N; ++j) {
                    const auto& a = fc[static_cast<std::size_t>(k)](r, col)[j];
                    CPoly b = CPoly(fs[static_cast<std::size_t>(k)](r, col)[j]) * cj;
                    if (a != b) return false;
                    cj = cj * c;
                }
            }
    return true;
}

/**
 * @brief Series solution Y^lambda of q dY/dq - c(lambda) Y = M_D Y with Y(0) = J^lambda,
 *        returned in Nakajima coordinates.
 */
inline std::vector<QSeries> solve_Y(const EigenData<Scalar>& E, std::size_t lambda) {
    const std::size_t d = E.dim();
    const int N = E.order;
    std::vector<Matrix<Scalar>> A;
    for (int j = 0; j <= N; ++j) A.push_back(E.Tinv * coefficient_matrix(E.M, j) * E.T);
    Scalar cl = -A[0](lambda, lambda);
    std::vector<std::vector<Scalar>> y(static_cast<std::size_t>(N) + 1, std::vector<Scalar>(d));
    y[0][lambda] = Scalar(1);
    for (int k = 1; k <= N; ++k) {
        std::vector<Scalar> rhs(d);
        for (int j = 1; j <= k; ++j) {
            auto t = A[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(k - j)];
            for (std::size_t m = 0; m < d; ++m) rhs[m] += t[m];
        }
        for (std::size_t m = 0; m < d; ++m) {
            Scalar den = Scalar(k) - cl + (-A[0](m, m));
            if (den.is_zero()) throw std::domain_error("solve_Y: resonance");
            y[static_cast<std::size_t>(k)][m] = rhs[m] / den;
        }
    }
    std::vector<QSeries> Y(d, QSeries(N));
    for (int k = 0; k <= N; ++k) {
        auto col = E.T * y[static_cast<std::size_t>(k)];
        for (std::size_t r = 0; r < d; ++r) Y[r][k] = col[r];
    }
    return Y;
}

/** @brief Hermitian pairing of two Nakajima-coordinate series vectors (conjugation acts on t only). */
inline QSeries hermitian_series_pairing(const EigenData<Scalar>& E, const std::vector<QSeries>& f, const std::vector<QSeries>& g) {
    QSeries s(E.order);
    for (std::size_t r = 0; r < E.dim(); ++r) {
        QSeries gc = g[r].map<Scalar>([](const Scalar& x) { return x.conj(); });
        s += eta_tilde_diagonal(E.basis[r]) * (f[r] * gc);
    }
    return s;
}

}  // namespace hilbgw
