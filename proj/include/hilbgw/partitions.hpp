/**
 * @file partitions.hpp
 * @brief Integer partitions, Young-diagram statistics, fixed-point tangent
 *        weights and symmetric-group characters.
 *
 * Boxes are addressed as (i, j) with row i and column j, both starting at 1.
 * Arm and leg follow the convention a(s) = lambda'_j - i (from the column)
 * and l(s) = lambda_i - j (from the row); for lambda = (2) the box (1,1) has
 * (a, l) = (0, 1).
 */
#pragma once

#include "rational.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilbgw {

class Partition {
public:
    Partition() = default;
    /** @brief From a list of positive parts in any order; zeros are dropped. */
    Partition(std::vector<int> parts) : p_(std::move(parts)) {  // NOLINT(implicit)
        for (int x : p_)
            if (x < 0) throw std::invalid_argument("Partition: negative part");
        p_.erase(std::remove(p_.begin(), p_.end(), 0), p_.end());
        std::sort(p_.begin(), p_.end(), std::greater<int>());
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return p_; }
    int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }
    int length() const { return static_cast<int>(p_.size()); }
    bool empty() const { return p_.empty(); }
    /** @brief Part i (1-based), 0 beyond the length. */
    int part(int i) const { return i >= 1 && i <= length() ? p_[static_cast<std::size_t>(i - 1)] : 0; }
    /** @brief Multiplicity of the part k. */
    int multiplicity(int k) const { return static_cast<int>(std::count(p_.begin(), p_.end(), k)); }

    Partition conjugate() const {
        std::vector<int> c(p_.empty() ? 0 : static_cast<std::size_t>(p_[0]), 0);
        for (int x : p_)
            for (int j = 0; j < x; ++j) ++c[static_cast<std::size_t>(j)];
        return Partition(c);
    }
    bool contains_box(int i, int j) const { return i >= 1 && j >= 1 && j <= part(i); }

    /** @brief Boxes (i, j) in row-major order. */
    std::vector<std::pair<int, int>> boxes() const {
        std::vector<std::pair<int, int>> b;
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= part(i); ++j) b.emplace_back(i, j);
        return b;
    }

    /** @brief The statistic n(lambda) = sum (i-1) lambda_i. */
    int n_stat() const {
        int s = 0;
        for (int i = 1; i <= length(); ++i) s += (i - 1) * part(i);
        return s;
    }

    /** @brief Partition with one part k removed; throws if k is not a part. */
    Partition remove_part(int k) const {
        auto q = p_;
        auto it = std::find(q.begin(), q.end(), k);
        if (it == q.end()) throw std::invalid_argument("Partition: part not present");
        q.erase(it);
        return Partition(q);
    }
    Partition add_part(int k) const {
        auto q = p_;
        q.push_back(k);
        return Partition(q);
    }

    /** @brief JSON-style text, e.g. "[2,1]". */
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
        return s + "]";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.p_ != b.p_; }
    /** @brief Lexicographic order on parts (so reverse-lex listing is descending). */
    friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

private:
    std::vector<int> p_;
};

/** @brief Whether a dominates b (same size): partial sums of a are at least those of b. */
inline bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

/** @brief All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n). */
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rem, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rem - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/** @brief Position of mu in enumerate_partitions(|mu|). */
inline std::size_t partition_index(const std::vector<Partition>& parts, const Partition& mu) {
    auto it = std::find(parts.begin(), parts.end(), mu);
    if (it == parts.end()) throw std::invalid_argument("partition_index: " + mu.str() + " not in list");
    return static_cast<std::size_t>(it - parts.begin());
}

/** @brief z(mu) = |Aut(mu)| * prod mu_i. */
inline Rational z_factor(const Partition& mu) {
    mpz_class z = 1;
    for (int x : mu.parts()) z *= x;
    std::map<int, int> mult;
    for (int x : mu.parts()) ++mult[x];
    for (auto [k, m] : mult) z *= factorial(m).num();
    return Rational(z);
}

/** @brief Arm and leg (a, l) of box (i, j) in the convention of the file comment. */
inline std::pair<int, int> arm_leg(const Partition& lambda, int i, int j) {
    if (!lambda.contains_box(i, j)) throw std::out_of_range("arm_leg: box outside the diagram");
    Partition c = lambda.conjugate();
    return {c.part(j) - i, lambda.part(i) - j};
}

/** @brief Product of hook lengths. */
inline Rational hook_product(const Partition& lambda) {
    mpz_class h = 1;
    for (auto [i, j] : lambda.boxes()) {
        auto [a, l] = arm_leg(lambda, i, j);
        h *= a + l + 1;
    }
    return Rational(h);
}

/** @brief c(lambda; t1, t2) = sum over boxes of (j-1) t1 + (i-1) t2. */
inline Scalar content_sum(const Partition& lambda) {
    long a = 0, b = 0;
    for (auto [i, j] : lambda.boxes()) {
        a += j - 1;
        b += i - 1;
    }
    return Scalar(a) * Scalar::t1() + Scalar(b) * Scalar::t2();
}

/** @brief The 2n tangent weights at the fixed point lambda, two per box in box order. */
inline std::vector<Scalar> tangent_weights(const Partition& lambda) {
    std::vector<Scalar> w;
    const Scalar t1 = Scalar::t1(), t2 = Scalar::t2();
    for (auto [i, j] : lambda.boxes()) {
        auto [a, l] = arm_leg(lambda, i, j);
        w.push_back(Scalar(-a) * t2 + Scalar(l + 1) * t1);
        w.push_back(Scalar(-l) * t1 + Scalar(a + 1) * t2);
    }
    return w;
}

/** @brief Product of the tangent weights (the equivariant Euler class of the tangent space). */
inline Scalar tangent_euler(const Partition& lambda) {
    Scalar e(1);
    for (const auto& w : tangent_weights(lambda)) e *= w;
    return e;
}

/**
 * @brief N_{2m-1,lambda} = sum over boxes of
 *        1/(a t2 - (l+1) t1)^{2m-1} + 1/(l t1 - (a+1) t2)^{2m-1}.
 */
inline Scalar bernoulli_weight_sum(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("bernoulli_weight_sum: m must be positive");
    const Scalar t1 = Scalar::t1(), t2 = Scalar::t2();
    Scalar s;
    for (auto [i, j] : lambda.boxes()) {
        auto [a, l] = arm_leg(lambda, i, j);
        Scalar d1 = Scalar(a) * t2 - Scalar(l + 1) * t1;
        Scalar d2 = Scalar(l) * t1 - Scalar(a + 1) * t2;
        s += d1.pow(-(2 * m - 1)) + d2.pow(-(2 * m - 1));
    }
    return s;
}

namespace detail {

/** @brief Murnaghan-Nakayama on beta-sets; cycles removed from the end of mu. */
inline long mn_character(std::vector<int> beta, const std::vector<int>& mu, std::size_t upto,
                         std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo) {
    if (upto == 0) return 1;
    auto key = std::make_pair(beta, std::vector<int>(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(upto)));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int k = mu[upto - 1];
    long total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
        int b = beta[idx];
        int nb = b - k;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > nb && x < b) ++between;
        auto next = beta;
        next[idx] = nb;
        std::sort(next.begin(), next.end(), std::greater<int>());
        long v = mn_character(next, mu, upto - 1, memo);
        total += (between % 2 ? -v : v);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/** @brief Irreducible character chi_lambda on the class of cycle type mu (Murnaghan-Nakayama). */
inline Rational character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("character: size mismatch");
    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
    const int l = lambda.length();
    std::vector<int> beta;
    for (int i = 1; i <= l; ++i) beta.push_back(lambda.part(i) + (l - i));
    return Rational(detail::mn_character(beta, mu.parts(), mu.parts().size(), memo));
}

}  // namespace hilbgw
