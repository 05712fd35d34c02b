/**
 * @file test_fock_space.cpp
 * @brief Heisenberg operators, pairings and the divisor operator M_D.
 */
#include "hilbgw/fock.hpp"

#include <gtest/gtest.h>

using namespace hilbgw;

namespace {
const Scalar t1 = Scalar::t1();
const Scalar t2 = Scalar::t2();
}  // namespace

TEST(FockSpace, CreationAndAnnihilation) {
    auto vac = basis_vector<Rational>(Partition{});
    auto one = alpha_apply(-1, vac);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.at(Partition{1}), Rational(1));
    auto two = alpha_apply(-1, one);
    EXPECT_EQ(two.at(Partition{1, 1}), Rational(2));
    auto back = alpha_apply(1, basis_vector<Rational>(Partition{1, 1}));
    EXPECT_EQ(back.at(Partition{1}), Rational(1));
    EXPECT_TRUE(alpha_apply(2, basis_vector<Rational>(Partition{1, 1})).empty());
    EXPECT_THROW(alpha_apply(0, vac), std::invalid_argument);
}

TEST(FockSpace, HeisenbergCommutator) {
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 4; ++n)
            for (const auto& mu : enumerate_partitions(n)) {
                auto v = basis_vector<Rational>(mu);
                auto ab = alpha_apply(k, alpha_apply(-k, v));
                auto ba = alpha_apply(-k, alpha_apply(k, v));
                Rational a = ab.count(mu) ? ab.at(mu) : Rational(0);
                Rational b = ba.count(mu) ? ba.at(mu) : Rational(0);
                EXPECT_EQ(a - b, Rational(k)) << "k=" << k << " mu=" << mu.str();
            }
}

TEST(FockSpace, PairingsOnBasis) {
    EXPECT_EQ(pairing_eta(Partition{1}, Partition{1}), Scalar(1) / (t1 * t2));
    EXPECT_EQ(pairing_eta(Partition{2}, Partition{2}), Scalar(-1) / (Scalar(2) * t1 * t2));
    EXPECT_EQ(pairing_eta_tilde(Partition{2}, Partition{2}), Scalar(1) / (Scalar(2) * t1 * t2));
    EXPECT_EQ(pairing_eta(Partition{1, 1}, Partition{1, 1}), Scalar(1) / (Scalar(2) * t1 * t1 * t2 * t2));
    EXPECT_TRUE(pairing_eta(Partition{2}, Partition{1, 1}).is_zero());
    EXPECT_THROW(pairing_eta(Partition{2}, Partition{1}), std::invalid_argument);
    FockVector<Scalar> f{{Partition{2}, t1}};
    FockVector<Scalar> g{{Partition{2}, t2}};
    EXPECT_EQ(pairing_hermitian(f, g), -t1 * t2 * eta_tilde_diagonal(Partition{2}));
}

TEST(FockSpace, AdjointRelation) {
    for (int k : {-3, -2, -1, 1, 2, 3}) EXPECT_TRUE(adjoint_check(k, 5)) << "k=" << k;
}

TEST(FockSpace, FSeriesCoefficients) {
    auto f1 = md_f_series<Scalar>(1, 4, Scalar(1));
    EXPECT_EQ(f1[0], Scalar(-1));
    EXPECT_EQ(f1[1], Scalar(2));
    EXPECT_EQ(f1[2], Scalar(-2));
    auto f2 = md_f_series<Scalar>(2, 4, Scalar(1));
    EXPECT_TRUE(f2[1].is_zero());
    EXPECT_EQ(f2[2], Scalar(-2));
}

TEST(FockSpace, DivisorOperatorLevelOneVanishes) {
    auto M = build_MD(1, 5);
    for (int k = 0; k <= 5; ++k) EXPECT_TRUE(M(0, 0)[k].is_zero());
}

TEST(FockSpace, DivisorOperatorLevelTwoClassical) {
    auto M = build_MD(2, 3);
    // Basis order: (2), (1,1).
    EXPECT_EQ(M(0, 0)[0], -(t1 + t2));
    EXPECT_TRUE(M(1, 1)[0].is_zero());
    EXPECT_EQ(M(0, 1)[0], Scalar(-1));
    EXPECT_EQ(M(1, 0)[0], t1 * t2);
}

TEST(FockSpace, DivisorOperatorSelfAdjoint) {
    for (int n = 1; n <= 4; ++n) {
        auto M = build_MD(n, 4);
        auto g = eta_gram(n);
        for (std::size_t r = 0; r < g.size(); ++r)
            for (std::size_t c = 0; c < g.size(); ++c)
                for (int k = 0; k <= 4; ++k)
                    EXPECT_EQ(g[r] * M(r, c)[k], g[c] * M(c, r)[k]) << "n=" << n << " r=" << r << " c=" << c;
    }
}

TEST(FockSpace, QuantumCorrectionsVanishOnAntidiagonal) {
    for (int n = 2; n <= 4; ++n) {
        auto M = build_MD(n, 4);
        for (std::size_t r = 0; r < M.rows(); ++r)
            for (std::size_t c = 0; c < M.cols(); ++c)
                for (int k = 1; k <= 4; ++k) EXPECT_TRUE(M(r, c)[k].evaluate(t1, -t1).is_zero());
    }
}

TEST(FockSpace, ThreePointSeries) {
    auto s = three_point_series(Partition{2}, Partition{2}, 3);
    auto M = build_MD(2, 3);
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(s[k], -eta_diagonal(Partition{2}) * M(0, 0)[k]);
    EXPECT_EQ(s[0], -(t1 + t2) / (Scalar(2) * t1 * t2));
    EXPECT_THROW(three_point_series(Partition{2}, Partition{1}, 2), std::invalid_argument);
}
