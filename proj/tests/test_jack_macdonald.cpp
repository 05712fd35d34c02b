/**
 * @file test_jack_macdonald.cpp
 * @brief Jack functions, the fixed-point basis, restrictions to fixed points
 *        and modified Macdonald polynomials.
 */
#include "hilbgw/jack.hpp"
#include "hilbgw/macdonald.hpp"

#include <gtest/gtest.h>

using namespace hilbgw;

namespace {
const Scalar t1 = Scalar::t1();
const Scalar t2 = Scalar::t2();
}  // namespace

TEST(Jack, AlphaOneIsHookTimesSchur) {
    for (int n = 1; n <= 5; ++n) {
        auto parts = enumerate_partitions(n);
        auto J = jack_power_coordinates<Rational>(n, Rational(1));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto s = schur_power_coordinates(parts[i]);
            Rational h = hook_product(parts[i]);
            for (std::size_t k = 0; k < parts.size(); ++k)
                EXPECT_EQ(J(i, k), h * s[k]) << "n=" << n << " lambda=" << parts[i].str();
        }
    }
}

TEST(Jack, SymbolicAlphaAtLevelTwo) {
    Scalar a = t1;  // any transcendental stands in for alpha
    auto J = jack_power_coordinates<Scalar>(2, a);
    // J_(2) = p_1^2 + alpha p_2, J_(1,1) = p_1^2 - p_2.
    EXPECT_EQ(J(0, 0), a);
    EXPECT_EQ(J(0, 1), Scalar(1));
    EXPECT_EQ(J(1, 0), Scalar(-1));
    EXPECT_EQ(J(1, 1), Scalar(1));
}

TEST(Jack, PowerMonomialTransitionIsInvertible) {
    for (int n = 1; n <= 5; ++n) {
        auto L = power_to_monomial(n);
        auto M = monomial_to_power(n);
        auto P = M * L;
        for (std::size_t i = 0; i < P.rows(); ++i)
            for (std::size_t j = 0; j < P.cols(); ++j) EXPECT_EQ(P(i, j), Rational(i == j ? 1 : 0));
    }
}

TEST(FixedPoints, NormsAreTangentEuler) {
    for (int n = 1; n <= 4; ++n) {
        auto fp = fixed_point_classes(n);
        for (std::size_t l = 0; l < fp.basis.size(); ++l) {
            EXPECT_EQ(fp.norms[l], tangent_euler(fp.basis[l])) << fp.basis[l].str();
            EXPECT_EQ(fp.eigenvalues[l], -content_sum(fp.basis[l]));
        }
    }
}

TEST(FixedPoints, Orthogonal) {
    for (int n = 2; n <= 4; ++n) {
        auto fp = fixed_point_classes(n);
        for (std::size_t a = 0; a < fp.basis.size(); ++a)
            for (std::size_t b = a + 1; b < fp.basis.size(); ++b)
                EXPECT_TRUE(pairing_eta(fp.vector(a), fp.vector(b)).is_zero());
    }
}

TEST(FixedPoints, UnitRestrictsToOne) {
    for (int n = 1; n <= 4; ++n) {
        auto fp = fixed_point_classes(n);
        Partition unit(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& eta : fp.basis) EXPECT_EQ(restriction(fp, unit, eta), Scalar(1)) << eta.str();
    }
}

TEST(FixedPoints, LocalizationRecoversPairing) {
    for (int n = 1; n <= 4; ++n) {
        auto fp = fixed_point_classes(n);
        for (const auto& mu : fp.basis)
            for (const auto& nu : fp.basis) {
                Scalar s;
                for (const auto& eta : fp.basis)
                    s += restriction(fp, mu, eta) * restriction(fp, nu, eta) / tangent_euler(eta);
                EXPECT_EQ(s, pairing_eta(mu, nu)) << mu.str() << " " << nu.str();
            }
    }
}

TEST(FixedPoints, DivisorRestriction) {
    auto fp = fixed_point_classes(2);
    // D = -|2>, and D restricts to -c(lambda) at each fixed point.
    for (const auto& eta : fp.basis) EXPECT_EQ(-restriction(fp, Partition{2}, eta), -content_sum(eta));
    EXPECT_THROW(restriction(fp, Partition{3}, Partition{2}), std::invalid_argument);
}

TEST(Macdonald, SmallCases) {
    EXPECT_EQ(macdonald_H(Partition{2}), (std::vector<Scalar>{Scalar(1), t1}));
    EXPECT_EQ(macdonald_H(Partition{1, 1}), (std::vector<Scalar>{Scalar(1), t2}));
    EXPECT_EQ(macdonald_H(Partition{1, 1, 1}), (std::vector<Scalar>{Scalar(1), t2 + t2 * t2, t2 * t2 * t2}));
    EXPECT_EQ(macdonald_H(Partition{2, 1}), (std::vector<Scalar>{Scalar(1), t1 + t2, t1 * t2}));
}

TEST(Macdonald, SpecializationsAndSymmetry) {
    for (int n = 1; n <= 4; ++n) {
        auto parts = enumerate_partitions(n);
        for (const auto& mu : parts) {
            auto K = macdonald_H(mu);
            auto Kc = macdonald_H(mu.conjugate());
            Rational multinomial = factorial(n);
            for (int p : mu.parts()) multinomial = multinomial / factorial(p);
            Scalar dim;
            for (std::size_t l = 0; l < parts.size(); ++l) {
                const auto& lam = parts[l];
                EXPECT_EQ(K[l].evaluate(Scalar(1), Scalar(1)), Scalar(character(lam, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))));
                EXPECT_EQ(K[l], Kc[l].evaluate(t2, t1));
                dim += K[l].evaluate(Scalar(0), Scalar(1)) * Scalar(character(lam, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
            }
            EXPECT_EQ(K[0], Scalar(1));
            EXPECT_EQ(K.back(), t2.pow(mu.n_stat()) * t1.pow(mu.conjugate().n_stat()));
            // H~_mu(0, 1) = h_mu, whose Schur expansion has dimension n! / prod mu_i!.
            EXPECT_EQ(dim, Scalar(multinomial));
        }
    }
}
