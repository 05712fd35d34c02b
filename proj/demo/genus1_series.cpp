/**
 * @file genus1_series.cpp
 * @brief Compute the genus-1 one-point series <(2)>_1 of Hilb^2(C^2) and
 *        recover its rational form in q.
 */
#include "hilbgw/cohft.hpp"
#include "hilbgw/reconstruct.hpp"

#include <iostream>

int main() {
    using namespace hilbgw;
    const int N = 8, K = 3;
    auto E = eigen_decompose(2, N);
    auto R = compute_R(E, K);
    QSeries s = reconstruct_invariant(1, {Partition{2}}, E, R);
    std::cout << "<(2)>_1 for n = 2, through q^" << N << ":\n";
    for (int k = 0; k <= N; ++k) std::cout << "  q^" << k << ": " << s[k] << "\n";
    RationalQ form = rational_reconstruct(s, 2);
    std::cout << "rational form: " << form.str() << "\n";
    return 0;
}
