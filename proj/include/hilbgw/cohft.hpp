/**
 * @file cohft.hpp
 * @brief Givental-Teleman reconstruction of higher-genus invariants from the
 *        TQFT, the translation and the R-matrix, plus the degree-0 Hodge oracle.
 *
 * Everything is expressed in the unnormalized idempotent basis eps_lambda,
 * where the TQFT is diagonal,
 *   omega_{g,n}(x_1, ..., x_n) = sum_lambda Delta_lambda^{g-1} prod_i x_{i,lambda},
 * and eta^{-1} = sum_lambda Delta_lambda eps_lambda (x) eps_lambda.
 * With Q = R^{-1} (the R-matrix solved from the QDE acts through its inverse
 * in this normalization of the action):
 *   - a leg with insertion x carries Q(psi) x;
 *   - an edge carries (eta^{-1} - Q(psi') eta^{-1} Q(psi'')^T) / (psi' + psi''),
 *     a polynomial because R is symplectic; the division is exact and checked;
 *   - a vertex of genus h receives sum_m (1/m!) T(psi_{extra})^m with
 *     T(z) = z (1 - Q(z)) 1, so T_b = -Q_{b-1} 1 for b >= 2, and its psi
 *     monomials are integrated directly on M_{h, val+m};
 *   - each graph is weighted by 1/|Aut|.
 */
#pragma once

#include "frobenius.hpp"
#include "hodge.hpp"
#include "jack.hpp"
#include "rmatrix.hpp"
#include "stable_graph.hpp"
#include "wk.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

namespace hilbgw {

/** @brief Whether legs and edges use R^{-1} (the default) or R itself. */
enum class ActionConvention { Inverse, Direct };

/** @brief Inverse of a z-series of matrices with identity constant term. */
template <class F>
std::vector<SeriesMatrix<F>> z_series_inverse(const std::vector<SeriesMatrix<F>>& R, int order) {
    const std::size_t d = R.front().rows();
    std::vector<SeriesMatrix<F>> Q{series_identity<F>(d, order)};
    for (std::size_t k = 1; k < R.size(); ++k) {
        SeriesMatrix<F> acc(d, d, Series<F>(order));
        for (std::size_t j = 1; j <= k; ++j) acc = acc + R[j] * Q[k - j];
        Q.push_back(-acc);
    }
    return Q;
}

/** @brief Precomputed data of the graph sum for one (n, K, N). */
template <class F>
class Reconstruction {
public:
    Reconstruction(const EigenData<F>& E, const RMatrix<F>& R, ActionConvention conv = ActionConvention::Inverse)
        : E_(E), K_(R.K), N_(E.order) {
        auto Reps = R.idempotent_frame(E);
        Q_ = conv == ActionConvention::Inverse ? z_series_inverse(Reps, N_) : Reps;
        const std::size_t d = E.dim();
        // T_b = -Q_{b-1} 1 for b = 2 .. K+1 (idempotent coordinates)
        T_.assign(static_cast<std::size_t>(K_) + 2, std::vector<Series<F>>(d, Series<F>(N_)));
        std::vector<Series<F>> one(d, Series<F>(F(Rational(1)), N_));
        for (int b = 2; b <= K_ + 1; ++b) {
            auto y = Q_[static_cast<std::size_t>(b - 1)] * one;
            for (std::size_t l = 0; l < d; ++l) T_[static_cast<std::size_t>(b)][l] = -y[l];
        }
        build_edges();
    }

    int z_order() const { return K_; }

    /** @brief Translation T_b in idempotent coordinates (zero for b < 2). */
    const std::vector<Series<F>>& translation(int b) const { return T_.at(static_cast<std::size_t>(b)); }

    /** @brief Translation T_b in Nakajima coordinates. */
    std::vector<Series<F>> translation_flat(int b) const { return E_.idempotent_matrix() * translation(b); }

    /** @brief Edge coefficient of psi'^a psi''^b as a matrix over idempotent indices. */
    const SeriesMatrix<F>& edge(int a, int b) const {
        if (a + b >= K_) throw std::out_of_range("Reconstruction: edge term beyond the z-order");
        return edges_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    /**
     * @brief The invariant series <x_1, ..., x_r>_g for insertions given in Nakajima coordinates.
     */
    Series<F> invariant(int g, const std::vector<std::vector<Series<F>>>& insertions, unsigned threads = 1) {
        const int r = static_cast<int>(insertions.size());
        if (2 * g - 2 + r <= 0) throw std::invalid_argument("reconstruct_invariant: unstable (g, r)");
        const std::size_t d = E_.dim();
        std::vector<std::vector<std::vector<Series<F>>>> legcoef;  // [leg][k][lambda]
        for (const auto& x : insertions) {
            auto y = E_.idempotent_coordinates(x);
            std::vector<std::vector<Series<F>>> per;
            for (int k = 0; k <= K_; ++k) per.push_back(Q_[static_cast<std::size_t>(k)] * y);
            legcoef.push_back(std::move(per));
        }
        const auto graphs = enumerate_stable_graphs(g, r);
        std::vector<Series<F>> contrib(graphs.size(), Series<F>(N_));
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < graphs.size(); i = next++) contrib[i] = graph_sum(graphs[i], legcoef, d);
        };
        const std::size_t nthreads = std::min<std::size_t>(std::max(1u, threads), graphs.size());
        if (nthreads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        // Summation in graph order keeps the result independent of the thread count.
        Series<F> total(N_);
        for (std::size_t i = 0; i < graphs.size(); ++i) total += F(Rational(1, graphs[i].automorphisms)) * contrib[i];
        return total;
    }

private:
    struct Slot {
        int vertex;
        int kind;  // 0 leg, 1 edge first half, 2 edge second half
        int index; // leg number or edge number
    };

    void build_edges() {
        const std::size_t d = E_.dim();
        // N_{ij} = delta_{i0} delta_{j0} Delta - Q_i Delta Q_j^T
        auto Nmat = [&](int i, int j) {
            SeriesMatrix<F> M(d, d, Series<F>(N_));
            const auto& Qi = Q_[static_cast<std::size_t>(i)];
            const auto& Qj = Q_[static_cast<std::size_t>(j)];
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t m = 0; m < d; ++m) {
                    Series<F> s(N_);
                    for (std::size_t nu = 0; nu < d; ++nu) s -= Qi(l, nu) * E_.Delta[nu] * Qj(m, nu);
                    if (i == 0 && j == 0 && l == m) s += E_.Delta[l];
                    M(l, m) = s;
                }
            return M;
        };
        edges_.assign(static_cast<std::size_t>(K_), std::vector<SeriesMatrix<F>>(static_cast<std::size_t>(K_)));
        if (!Nmat(0, 0).is_zero_matrix()) throw std::logic_error("Reconstruction: nonzero constant edge numerator");
        for (int deg = 1; deg <= K_; ++deg) {
            // E_{deg-1-j, j}, j = 0..deg-1, from the anti-diagonal of total degree deg
            SeriesMatrix<F> prev = Nmat(deg, 0);
            edges_[static_cast<std::size_t>(deg - 1)][0] = prev;
            for (int j = 1; j < deg; ++j) {
                SeriesMatrix<F> cur = Nmat(deg - j, j) - prev;
                edges_[static_cast<std::size_t>(deg - 1 - j)][static_cast<std::size_t>(j)] = cur;
                prev = cur;
            }
            if (Nmat(0, deg) != prev) throw std::logic_error("Reconstruction: edge numerator not divisible by psi' + psi''");
        }
    }

    /** @brief Delta^{h-1} sum_m (1/m!) sum_{b_j >= 2} prod T_{b_j} <tau_ks tau_bs>_h at idempotent lambda. */
    Series<F> vertex_value(int h, std::size_t lambda, std::vector<int> ks) {
        std::sort(ks.begin(), ks.end());
        auto key = std::make_tuple(h, lambda, ks);
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            if (auto it = vertex_memo_.find(key); it != vertex_memo_.end()) return it->second;
        }
        const int val = static_cast<int>(ks.size());
        int rem = 3 * h - 3 + val;
        for (int k : ks) rem -= k;
        Series<F> acc(N_);
        if (rem >= 0) {
            // compositions of rem into parts c_j = b_j - 1 >= 1
            std::vector<int> bs;
            auto rec = [&](auto&& self, int left) -> void {
                if (left == 0) {
                    auto idx = ks;
                    Series<F> prod(F(Rational(1)), N_);
                    for (int b : bs) {
                        if (b > K_ + 1) throw std::out_of_range("Reconstruction: translation beyond the z-order");
                        idx.push_back(b);
                        prod *= T_[static_cast<std::size_t>(b)][lambda];
                    }
                    Rational w = psi_integral(h, idx);
                    if (!w.is_zero()) acc += F(w / factorial(static_cast<long>(bs.size()))) * prod;
                    return;
                }
                for (int c = 1; c <= left; ++c) {
                    bs.push_back(c + 1);
                    self(self, left - c);
                    bs.pop_back();
                }
            };
            if (2 * h - 2 + val > 0) rec(rec, rem);
        }
        Series<F> power(F(Rational(1)), N_);
        if (h == 0) power = E_.Delta[lambda].inverse();
        for (int i = 1; i < h; ++i) power *= E_.Delta[lambda];
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto [it, ok] = vertex_memo_.emplace(key, power * acc);
        return it->second;
    }

    Series<F> graph_sum(const StableGraph& G, const std::vector<std::vector<std::vector<Series<F>>>>& legcoef, std::size_t d) {
        const int V = G.vertices();
        std::vector<Slot> slots;
        for (int i = 0; i < static_cast<int>(G.leg_vertex.size()); ++i) slots.push_back({G.leg_vertex[static_cast<std::size_t>(i)], 0, i});
        auto edges = G.edge_list();
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            slots.push_back({edges[static_cast<std::size_t>(e)].first, 1, e});
            slots.push_back({edges[static_cast<std::size_t>(e)].second, 2, e});
        }
        std::vector<int> dims(static_cast<std::size_t>(V));
        for (int v = 0; v < V; ++v) dims[static_cast<std::size_t>(v)] = 3 * G.genus[static_cast<std::size_t>(v)] - 3 + G.valence(v);
        Series<F> total(N_);
        std::vector<std::size_t> lam(static_cast<std::size_t>(V), 0);
        std::vector<int> expo(slots.size(), 0), used(static_cast<std::size_t>(V), 0);
        while (true) {
            auto rec = [&](auto&& self, std::size_t s) -> void {
                if (s == slots.size()) {
                    Series<F> prod(F(Rational(1)), N_);
                    for (std::size_t t = 0; t < slots.size(); ++t) {
                        const Slot& sl = slots[t];
                        if (sl.kind == 0) {
                            prod *= legcoef[static_cast<std::size_t>(sl.index)][static_cast<std::size_t>(expo[t])][lam[static_cast<std::size_t>(sl.vertex)]];
                        } else if (sl.kind == 1) {
                            auto [u, v] = edges[static_cast<std::size_t>(sl.index)];
                            prod *= edge(expo[t], expo[t + 1])(lam[static_cast<std::size_t>(u)], lam[static_cast<std::size_t>(v)]);
                        }
                        if (prod.is_zero()) return;
                    }
                    for (int v = 0; v < V; ++v) {
                        std::vector<int> ks;
                        for (std::size_t t = 0; t < slots.size(); ++t)
                            if (slots[t].vertex == v) ks.push_back(expo[t]);
                        prod *= vertex_value(G.genus[static_cast<std::size_t>(v)], lam[static_cast<std::size_t>(v)], ks);
                        if (prod.is_zero()) return;
                    }
                    total += prod;
                    return;
                }
                const int v = slots[s].vertex;
                for (int k = 0; used[static_cast<std::size_t>(v)] + k <= dims[static_cast<std::size_t>(v)]; ++k) {
                    if (slots[s].kind == 2 && expo[s - 1] + k >= K_) break;
                    if (slots[s].kind == 0 && k > K_) break;
                    expo[s] = k;
                    used[static_cast<std::size_t>(v)] += k;
                    self(self, s + 1);
                    used[static_cast<std::size_t>(v)] -= k;
                }
                expo[s] = 0;
            };
            rec(rec, 0);
            int v = 0;
            while (v < V && ++lam[static_cast<std::size_t>(v)] == d) lam[static_cast<std::size_t>(v++)] = 0;
            if (v == V) break;
        }
        return total;
    }

    const EigenData<F>& E_;
    int K_, N_;
    std::vector<SeriesMatrix<F>> Q_;
    std::vector<std::vector<Series<F>>> T_;
    std::vector<std::vector<SeriesMatrix<F>>> edges_;
    std::map<std::tuple<int, std::size_t, std::vector<int>>, Series<F>> vertex_memo_;
    std::mutex memo_mutex_;
};

/** @brief <mu^1, ..., mu^r>_g as a q-series, from eigen-data and an R-matrix. */
inline QSeries reconstruct_invariant(int g, const std::vector<Partition>& insertions, const EigenData<Scalar>& E,
                                     const RMatrix<Scalar>& R, ActionConvention conv = ActionConvention::Inverse,
                                     unsigned threads = 1) {
    Reconstruction<Scalar> rec(E, R, conv);
    std::vector<std::vector<QSeries>> xs;
    for (const auto& mu : insertions) xs.push_back(nakajima_coordinates(E, mu));
    return rec.invariant(g, xs, threads);
}

/**
 * @brief Degree-0 invariant by localization on Hilb^n:
 *   sum_eta [mu|_eta] int_{M_{g,r}} prod_{w in T_eta} (sum_i (-1)^i lambda_i w^{g-i}) / w,
 * for g = 1 with one insertion and g = 2 with none.
 */
inline Scalar degree0_oracle(int g, const std::vector<Partition>& insertions, int n, const HodgeTable& hodge) {
    if (!((g == 1 && insertions.size() == 1) || (g == 2 && insertions.empty())))
        throw std::invalid_argument("degree0_oracle: supported cases are genus 1 with one insertion and genus 2 with none");
    const int dim = 3 * g - 3 + static_cast<int>(insertions.size());
    FixedPointBasis fp = fixed_point_classes(n);
    Scalar total;
    for (const auto& eta : fp.basis) {
        // polynomial in lambda_1..lambda_g keyed by exponents, truncated at weighted degree dim
        std::map<std::vector<int>, Scalar> poly{{std::vector<int>(static_cast<std::size_t>(g), 0), Scalar(1)}};
        for (const auto& w : tangent_weights(eta)) {
            std::map<std::vector<int>, Scalar> next;
            for (const auto& [e, c] : poly) {
                int deg = 0;
                for (int i = 0; i < g; ++i) deg += (i + 1) * e[static_cast<std::size_t>(i)];
                for (int i = 0; i <= g && deg + i <= dim; ++i) {
                    auto f = e;
                    if (i > 0) ++f[static_cast<std::size_t>(i - 1)];
                    Scalar term = c * w.pow(g - i - 1);
                    next[f] += (i % 2 ? -term : term);
                }
            }
            poly = std::move(next);
        }
        Scalar integral;
        for (const auto& [e, c] : poly) {
            int deg = 0;
            for (int i = 0; i < g; ++i) deg += (i + 1) * e[static_cast<std::size_t>(i)];
            if (deg == dim) integral += c * Scalar(hodge.get(g, e));
        }
        if (g == 1) integral *= restriction(fp, insertions[0], eta);
        total += integral;
    }
    return total;
}

}  // namespace hilbgw
