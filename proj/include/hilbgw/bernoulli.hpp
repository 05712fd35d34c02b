/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers and Bernoulli polynomials.
 *
 * B_m is defined by t/(e^t - 1) = sum_m B_m t^m / m! (so B_1 = -1/2) and
 * B_m(x) by t e^{xt}/(e^t - 1) = sum_m B_m(x) t^m / m!.
 */
#pragma once

#include "rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace hilbgw {

/** @brief The Bernoulli number B_m. */
inline Rational bernoulli_number(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli_number: negative index");
    // Coefficients of t/(e^t-1) satisfy sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1.
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= m) {
        long n = static_cast<long>(table.size());
        Rational acc(0);
        for (long k = 0; k < n; ++k) acc += binomial(n + 1, k) * table[static_cast<std::size_t>(k)];
        table.push_back(-acc / binomial(n + 1, n));
    }
    return table[static_cast<std::size_t>(m)];
}

/** @brief The Bernoulli polynomial B_m evaluated at x, for any ring F built from Rational. */
template <class F>
F bernoulli_polynomial(int m, const F& x) {
    if (m < 0) throw std::invalid_argument("bernoulli_polynomial: negative index");
    // B_m(x) = sum_k C(m,k) B_k x^{m-k}, evaluated by Horner in x.
    F acc = F(Rational(0));
    for (int j = 0; j <= m; ++j) {
        // coefficient of x^{m-j}... Horner runs from the top power x^m down.
        acc = acc * x + F(binomial(m, j) * bernoulli_number(j));
    }
    return acc;
}

}  // namespace hilbgw
