/**
 * @file test_partitions.cpp
 * @brief Partition enumeration, diagram statistics, tangent weights and
 *        symmetric-group characters.
 */
#include "hilbgw/partitions.hpp"

#include <gtest/gtest.h>

using namespace hilbgw;

namespace {
const Scalar t1 = Scalar::t1();
const Scalar t2 = Scalar::t2();
}  // namespace

TEST(Partitions, EnumerationCountsAndOrder) {
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n < static_cast<int>(counts.size()); ++n)
        EXPECT_EQ(enumerate_partitions(n).size(), counts[static_cast<std::size_t>(n)]) << "n=" << n;
    auto p3 = enumerate_partitions(3);
    EXPECT_EQ(p3[0], (Partition{3}));
    EXPECT_EQ(p3[1], (Partition{2, 1}));
    EXPECT_EQ(p3[2], (Partition{1, 1, 1}));
    EXPECT_EQ(partition_index(p3, Partition{2, 1}), 1u);
}

TEST(Partitions, BasicStatistics) {
    Partition p{3, 1, 1};
    EXPECT_EQ(p.size(), 5);
    EXPECT_EQ(p.length(), 3);
    EXPECT_EQ(p.multiplicity(1), 2);
    EXPECT_EQ(p.conjugate(), (Partition{3, 1, 1}));
    EXPECT_EQ((Partition{2, 1}).conjugate(), (Partition{2, 1}));
    EXPECT_EQ((Partition{4}).conjugate(), (Partition{1, 1, 1, 1}));
    EXPECT_EQ(p.str(), "[3,1,1]");
    EXPECT_EQ((Partition{2, 2, 1}).n_stat(), 4);
    EXPECT_EQ((Partition{0, 2, 1}), (Partition{2, 1}));
    EXPECT_TRUE(dominates(Partition{3}, Partition{2, 1}));
    EXPECT_FALSE(dominates(Partition{2, 1}, Partition{3}));
}

TEST(Partitions, ZFactor) {
    EXPECT_EQ(z_factor(Partition{2}), Rational(2));
    EXPECT_EQ(z_factor(Partition{1, 1}), Rational(2));
    EXPECT_EQ(z_factor(Partition{2, 1, 1}), Rational(4));
    EXPECT_EQ(z_factor(Partition{2, 2}), Rational(8));
    for (int n = 1; n <= 6; ++n) {
        Rational s(0);
        for (const auto& mu : enumerate_partitions(n)) s += Rational(1) / z_factor(mu);
        EXPECT_EQ(s, Rational(1)) << "n=" << n;
    }
}

TEST(Partitions, ArmLegAndHooks) {
    auto [a, l] = arm_leg(Partition{2}, 1, 1);
    EXPECT_EQ(a, 0);
    EXPECT_EQ(l, 1);
    auto [a2, l2] = arm_leg(Partition{1, 1}, 1, 1);
    EXPECT_EQ(a2, 1);
    EXPECT_EQ(l2, 0);
    EXPECT_THROW(arm_leg(Partition{1}, 2, 1), std::out_of_range);
    EXPECT_EQ(hook_product(Partition{2, 1}), Rational(3));
    EXPECT_EQ(hook_product(Partition{3, 2}), Rational(24));
}

TEST(Partitions, ContentSum) {
    EXPECT_EQ(content_sum(Partition{2}), t1);
    EXPECT_EQ(content_sum(Partition{1, 1}), t2);
    EXPECT_EQ(content_sum(Partition{2, 1}), t1 + t2);
}

TEST(Partitions, TangentWeightsAtDegreeTwo) {
    auto w = tangent_weights(Partition{2});
    ASSERT_EQ(w.size(), 4u);
    EXPECT_EQ(w[0], Scalar(2) * t1);
    EXPECT_EQ(w[1], t2 - t1);
    EXPECT_EQ(w[2], t1);
    EXPECT_EQ(w[3], t2);
    EXPECT_EQ(tangent_euler(Partition{1}), t1 * t2);
    EXPECT_EQ(tangent_euler(Partition{2}), Scalar(2) * t1 * t1 * t2 * (t2 - t1));
}

TEST(Partitions, TangentWeightsSymmetricUnderConjugation) {
    for (const auto& lam : enumerate_partitions(4)) {
        Scalar e = tangent_euler(lam);
        Scalar ec = tangent_euler(lam.conjugate());
        EXPECT_EQ(ec, e.evaluate(t2, t1)) << lam.str();
    }
}

TEST(Partitions, BernoulliWeightSum) {
    EXPECT_EQ(bernoulli_weight_sum(Partition{1}, 1), Scalar(-1) / t1 - Scalar(1) / t2);
    EXPECT_EQ(bernoulli_weight_sum(Partition{1}, 2), Scalar(-1) / (t1 * t1 * t1) - Scalar(1) / (t2 * t2 * t2));
    EXPECT_THROW(bernoulli_weight_sum(Partition{1}, 0), std::invalid_argument);
}

TEST(Partitions, CharacterTable) {
    EXPECT_EQ(character(Partition{2, 1}, Partition{1, 1, 1}), Rational(2));
    EXPECT_EQ(character(Partition{2, 1}, Partition{2, 1}), Rational(0));
    EXPECT_EQ(character(Partition{2, 1}, Partition{3}), Rational(-1));
    EXPECT_EQ(character(Partition{1, 1, 1}, Partition{2, 1}), Rational(-1));
    EXPECT_EQ(character(Partition{2, 2}, Partition{2, 2}), Rational(2));
    for (int n = 1; n <= 5; ++n) {
        auto ps = enumerate_partitions(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                Rational s(0);
                for (const auto& mu : ps) s += character(a, mu) * character(b, mu) / z_factor(mu);
                EXPECT_EQ(s, Rational(a == b ? 1 : 0)) << a.str() << " " << b.str();
            }
    }
}
