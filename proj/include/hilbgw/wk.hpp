/**
 * @file wk.hpp
 * @brief Intersection numbers <tau_{a_1} ... tau_{a_m}>_g of psi classes on
 *        moduli spaces of stable curves, by the DVV (Virasoro) recursion.
 *
 * With (-1)!! = 1 and D the remaining indices,
 *   (2k+3)!! <tau_{k+1} tau_D>_g
 *     = sum_j (2k+2d_j+1)!!/(2d_j-1)!! <tau_{d_j+k} tau_{D - d_j}>_g
 *     + 1/2 sum_{r+s=k-1} (2r+1)!!(2s+1)!! <tau_r tau_s tau_D>_{g-1}
 *     + 1/2 sum_{r+s=k-1} (2r+1)!!(2s+1)!! sum_{g1+g2=g, I+J=D} <tau_r tau_I>_{g1} <tau_s tau_J>_{g2}.
 * Base cases: <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24 (the recursion is empty for
 * the latter). All-zero indices otherwise only occur in empty dimension.
 */
#pragma once

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

namespace hilbgw {

/** @brief Odd double factorial (2k-1)!! as an integer, with (-1)!! = 1. */
inline mpz_class odd_double_factorial(int twice_k_minus_one) {
    mpz_class r = 1;
    for (int x = twice_k_minus_one; x > 1; x -= 2) r *= x;
    return r;
}

/** @brief Memoized table of psi intersection numbers; safe for concurrent use. */
class PsiIntegralTable {
public:
    using Key = std::pair<int, std::vector<int>>;

    /** @brief <tau_{a_1} ... tau_{a_m}>_g; zero when the dimension does not match or (g, m) is unstable. */
    Rational get(int g, std::vector<int> a) {
        std::sort(a.begin(), a.end(), std::greater<int>());
        std::lock_guard<std::recursive_mutex> lock(mu_);
        return compute(g, a);
    }

    /** @brief Whether the dimension constraint holds: sum a_i = 3g - 3 + m with 2g - 2 + m > 0. */
    static bool admissible(int g, const std::vector<int>& a) {
        const int m = static_cast<int>(a.size());
        if (g < 0 || 2 * g - 2 + m <= 0) return false;
        for (int x : a)
            if (x < 0) return false;
        return std::accumulate(a.begin(), a.end(), 0) == 3 * g - 3 + m;
    }

    /** @brief All stored entries, sorted by key. */
    std::map<Key, Rational> entries() const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        return memo_;
    }
    /** @brief Seed an entry (from a cache file). */
    void insert(int g, std::vector<int> a, const Rational& v) {
        std::sort(a.begin(), a.end(), std::greater<int>());
        std::lock_guard<std::recursive_mutex> lock(mu_);
        memo_[{g, a}] = v;
    }

    /** @brief Compute and store every admissible entry with genus <= g_max and at most m_max points. */
    void fill(int g_max, int m_max) {
        for (int g = 0; g <= g_max; ++g)
            for (int m = 1; m <= m_max; ++m) {
                int dim = 3 * g - 3 + m;
                if (dim < 0 || 2 * g - 2 + m <= 0) continue;
                std::vector<int> cur;
                auto rec = [&](auto&& self, int left, int maxpart, int slots) -> void {
                    if (slots == 0) {
                        if (left == 0) get(g, cur);
                        return;
                    }
                    for (int x = std::min(left, maxpart); x >= 0; --x) {
                        cur.push_back(x);
                        self(self, left - x, x, slots - 1);
                        cur.pop_back();
                    }
                };
                rec(rec, dim, dim, m);
            }
    }

private:
    Rational compute(int g, const std::vector<int>& a) {
        if (!admissible(g, a)) return Rational(0);
        Key key{g, a};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Rational result(0);
        if (g == 1 && a.size() == 1) {
            result = Rational(1, 24);
        } else if (a[0] == 0) {
            result = (g == 0 && a.size() == 3) ? Rational(1) : Rational(0);
        } else {
            int k = a[0] - 1;
            std::vector<int> D(a.begin() + 1, a.end());
            Rational acc(0);
            for (std::size_t j = 0; j < D.size(); ++j) {
                auto E = D;
                E[j] += k;
                acc += Rational(odd_double_factorial(2 * k + 2 * D[j] + 1)) / Rational(odd_double_factorial(2 * D[j] - 1)) *
                       get_sorted(g, E);
            }
            for (int r = 0; r <= k - 1; ++r) {
                int s = k - 1 - r;
                Rational w = Rational(mpz_class(odd_double_factorial(2 * r + 1) * odd_double_factorial(2 * s + 1))) / Rational(2);
                auto E = D;
                E.push_back(r);
                E.push_back(s);
                Rational inner = get_sorted(g - 1, E);
                // Splittings of D into I and J, with genus g1 + g2 = g.
                const std::size_t nD = D.size();
                for (unsigned long mask = 0; mask < (1UL << nD); ++mask) {
                    std::vector<int> I{r}, J{s};
                    for (std::size_t b = 0; b < nD; ++b) ((mask >> b) & 1UL ? I : J).push_back(D[b]);
                    for (int g1 = 0; g1 <= g; ++g1) {
                        Rational x = get_sorted(g1, I);
                        if (x.is_zero()) continue;
                        inner += x * get_sorted(g - g1, J);
                    }
                }
                acc += w * inner;
            }
            result = acc / Rational(odd_double_factorial(2 * k + 3));
        }
        memo_.emplace(std::move(key), result);
        return result;
    }
    Rational get_sorted(int g, std::vector<int> a) {
        std::sort(a.begin(), a.end(), std::greater<int>());
        return compute(g, a);
    }

    mutable std::recursive_mutex mu_;
    std::map<Key, Rational> memo_;
};

/** @brief Process-wide table used by psi_integral. */
inline PsiIntegralTable& global_psi_table() {
    static PsiIntegralTable table;
    return table;
}

/** @brief <tau_{a_1} ... tau_{a_m}>_g. */
inline Rational psi_integral(int g, const std::vector<int>& a) {
    return global_psi_table().get(g, a);
}

/** @brief String equation residual: <tau_0 tau_a>_g - sum_j <... tau_{a_j - 1} ...>_g. */
inline Rational string_residual(PsiIntegralTable& t, int g, const std::vector<int>& a) {
    auto withzero = a;
    withzero.push_back(0);
    Rational rhs(0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        auto b = a;
        --b[j];
        rhs += t.get(g, b);
    }
    return t.get(g, withzero) - rhs;
}

/** @brief Dilaton equation residual: <tau_1 tau_a>_g - (2g - 2 + m) <tau_a>_g. */
inline Rational dilaton_residual(PsiIntegralTable& t, int g, const std::vector<int>& a) {
    auto with1 = a;
    with1.push_back(1);
    return t.get(g, with1) - Rational(2 * g - 2 + static_cast<long>(a.size())) * t.get(g, a);
}

}  // namespace hilbgw
