/**
 * @file fixed_points.cpp
 * @brief List the torus-fixed points of Hilb^3(C^2) with their tangent
 *        weights, Euler classes and the restriction of each Nakajima class.
 */
#include "hilbgw/jack.hpp"

#include <iostream>

int main() {
    using namespace hilbgw;
    const int n = 3;
    FixedPointBasis fp = fixed_point_classes(n);
    for (std::size_t l = 0; l < fp.basis.size(); ++l) {
        const Partition& lam = fp.basis[l];
        std::cout << "fixed point " << lam.str() << "\n  weights:";
        for (const auto& w : tangent_weights(lam)) std::cout << " " << w;
        std::cout << "\n  euler: " << fp.norms[l] << "\n";
        for (const auto& mu : fp.basis) std::cout << "  " << mu.str() << " restricts to " << restriction(fp, mu, lam) << "\n";
    }
    return 0;
}
