/**
 * @file test_r_matrix.cpp
 * @brief The R-matrix recursion: anchors, symplectic condition, QDE residual,
 *        uniqueness under the anchor and the series solutions Y^lambda.
 */
#include "hilbgw/rmatrix.hpp"

#include <gtest/gtest.h>

using namespace hilbgw;

namespace {

const Scalar t1 = Scalar::t1();
const Scalar t2 = Scalar::t2();

const EigenData<Scalar>& level_two() {
    static const EigenData<Scalar> E = eigen_decompose(2, 6);
    return E;
}

const RMatrix<Scalar>& level_two_R() {
    static const RMatrix<Scalar> R = compute_R(level_two(), 4);
    return R;
}

}  // namespace

TEST(RMatrix, LevelOneClosedForm) {
    auto E = eigen_decompose(1, 3);
    auto R = compute_R(E, 5);
    auto anchor = hilb_anchor(Partition{1}, 5);
    EXPECT_EQ(anchor[1], (Scalar(-1) / t1 - Scalar(1) / t2) / Scalar(12));
    EXPECT_EQ(anchor[2], (Scalar(1) / t1 + Scalar(1) / t2).pow(2) / Scalar(288));
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(R.Rt[static_cast<std::size_t>(k)](0, 0), QSeries(anchor[k], 3)) << "k=" << k;
}

TEST(RMatrix, LevelTwoIdentities) {
    const auto& E = level_two();
    const auto& R = level_two_R();
    EXPECT_TRUE(frame_identity_holds(E));
    EXPECT_TRUE(symplectic_check(R, E));
    EXPECT_TRUE(qde_residual_vanishes(R, E));
    EXPECT_TRUE(anchor_check(R, default_anchors(E, 4, ScalarEmbedding{})));
    auto flat = R.flat(E);
    EXPECT_EQ(flat[0], series_identity<Scalar>(E.dim(), E.order));
}

TEST(RMatrix, FirstOrderCoefficientAtOrigin) {
    const auto& E = level_two();
    const auto& R = level_two_R();
    for (std::size_t l = 0; l < E.dim(); ++l)
        EXPECT_EQ(R.Rt[1](l, l)[0], bernoulli_weight_sum(E.basis[l], 1) / Scalar(12)) << E.basis[l].str();
}

TEST(RMatrix, FirstOrderIsSelfAdjoint) {
    const auto& E = level_two();
    auto flat = level_two_R().flat(E);
    EXPECT_EQ(flat[1], eta_adjoint(flat[1], E.gram));
}

TEST(RMatrix, EvenAnchorPerturbationBreaksSymplecticCondition) {
    const auto& E = level_two();
    auto anchors = default_anchors(E, 4, ScalarEmbedding{});
    anchors[0][2] += t1;
    auto R = compute_R(E, 4, anchors);
    EXPECT_TRUE(qde_residual_vanishes(R, E));
    EXPECT_FALSE(symplectic_check(R, E));
    EXPECT_FALSE(anchor_check(R, default_anchors(E, 4, ScalarEmbedding{})));
}

TEST(RMatrix, OddAnchorPerturbationIsDetectedByAnchor) {
    const auto& E = level_two();
    auto anchors = default_anchors(E, 4, ScalarEmbedding{});
    anchors[1][1] += t2;
    auto R = compute_R(E, 4, anchors);
    EXPECT_TRUE(qde_residual_vanishes(R, E));
    EXPECT_FALSE(anchor_check(R, default_anchors(E, 4, ScalarEmbedding{})));
    EXPECT_NE(R.Rt[1], level_two_R().Rt[1]);
}

TEST(RMatrix, LevelThreeIdentities) {
    auto E = eigen_decompose(3, 3);
    auto R = compute_R(E, 3);
    EXPECT_TRUE(symplectic_check(R, E));
    EXPECT_TRUE(qde_residual_vanishes(R, E));
}

TEST(RMatrix, DivisorConsistency) { EXPECT_TRUE(divisor_consistency(2, 2, 4)); }

TEST(RMatrix, NegativeOrderRejected) { EXPECT_THROW(compute_R(level_two(), -1), std::invalid_argument); }

TEST(SeriesSolutions, LevelOneIsConstant) {
    auto E = eigen_decompose(1, 4);
    auto Y = solve_Y(E, 0);
    ASSERT_EQ(Y.size(), 1u);
    EXPECT_EQ(Y[0], QSeries(t1 * t2, 4));
}

TEST(SeriesSolutions, SolveDifferentialEquation) {
    const auto& E = level_two();
    for (std::size_t l = 0; l < E.dim(); ++l) {
        auto Y = solve_Y(E, l);
        Scalar c = content_sum(E.basis[l]);
        auto MY = E.M * Y;
        for (std::size_t r = 0; r < E.dim(); ++r) {
            EXPECT_EQ(Y[r].euler_derivative() - c * Y[r], MY[r]);
            EXPECT_EQ(Y[r][0], E.T(r, l));
        }
    }
}
