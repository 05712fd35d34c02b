/**
 * @file test_frobenius_ring.cpp
 * @brief Eigen-data of M_D, idempotents, their norms and TQFT correlators.
 */
#include "hilbgw/frobenius.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace hilbgw;

namespace {

const Scalar t1 = Scalar::t1();
const Scalar t2 = Scalar::t2();

struct Level {
    int n;
    int order;
};

class FrobeniusRing : public ::testing::TestWithParam<Level> {
protected:
    static const EigenData<Scalar>& data(const Level& L) {
        static std::map<int, EigenData<Scalar>> cache;
        auto it = cache.find(L.n);
        if (it == cache.end()) it = cache.emplace(L.n, eigen_decompose(L.n, L.order)).first;
        return it->second;
    }
};

std::vector<QSeries> scaled(const std::vector<QSeries>& x, const Scalar& c) {
    std::vector<QSeries> y = x;
    for (auto& s : y) s = c * s;
    return y;
}

}  // namespace

TEST_P(FrobeniusRing, EigenEquation) {
    const auto& E = data(GetParam());
    auto lhs = E.M * E.Psi;
    auto rhs = E.Psi * series_diagonal(E.v, E.order);
    EXPECT_EQ(lhs, rhs);
    for (std::size_t l = 0; l < E.dim(); ++l) EXPECT_EQ(E.v[l][0], -content_sum(E.basis[l]));
    EXPECT_EQ(coefficient_matrix(E.Psi, 0), E.T);
}

TEST_P(FrobeniusRing, IdempotentsMultiply) {
    const auto& E = data(GetParam());
    const std::size_t d = E.dim();
    std::vector<QSeries> sum(d, QSeries(E.order));
    for (std::size_t a = 0; a < d; ++a) {
        auto ea = E.idempotent(a);
        for (std::size_t r = 0; r < d; ++r) sum[r] += ea[r];
        for (std::size_t b = 0; b < d; ++b) {
            auto p = quantum_product(ea, E.idempotent(b), E);
            for (std::size_t r = 0; r < d; ++r) EXPECT_EQ(p[r], a == b ? ea[r] : QSeries(E.order));
            Series<Scalar> pair = E.eta(ea, E.idempotent(b));
            EXPECT_EQ(pair, a == b ? E.Delta[a].inverse() : QSeries(E.order));
        }
    }
    auto unit = nakajima_coordinates(E, Partition(std::vector<int>(static_cast<std::size_t>(E.n), 1)));
    for (std::size_t r = 0; r < d; ++r) EXPECT_EQ(sum[r], unit[r]);
}

TEST_P(FrobeniusRing, NormsAtOriginAreTangentEuler) {
    const auto& E = data(GetParam());
    for (std::size_t l = 0; l < E.dim(); ++l) EXPECT_EQ(E.Delta[l][0], tangent_euler(E.basis[l]));
}

TEST_P(FrobeniusRing, MultiplicationRoutesAgree) {
    const auto& E = data(GetParam());
    std::vector<QSeries> divisor(E.dim(), QSeries(E.order));
    if (E.n >= 2) {
        std::vector<int> p{2};
        p.resize(static_cast<std::size_t>(E.n - 1), 1);
        divisor = scaled(nakajima_coordinates(E, Partition(p)), Scalar(-1));
    }
    EXPECT_EQ(quantum_mult_operator(divisor, E), E.M);
    EXPECT_EQ(quantum_mult_operator_idempotent(divisor, E), E.M);
    for (const auto& mu : E.basis) {
        auto x = nakajima_coordinates(E, mu);
        EXPECT_EQ(quantum_mult_operator(x, E), quantum_mult_operator_idempotent(x, E)) << mu.str();
    }
}

TEST_P(FrobeniusRing, TqftCorrelators) {
    const auto& E = data(GetParam());
    auto unit = nakajima_coordinates(E, Partition(std::vector<int>(static_cast<std::size_t>(E.n), 1)));
    EXPECT_EQ(tqft_correlator(1, {unit}, E), QSeries(Scalar(static_cast<long>(E.dim())), E.order));
    for (const auto& a : E.basis)
        for (const auto& b : E.basis) {
            auto x = nakajima_coordinates(E, a), y = nakajima_coordinates(E, b);
            EXPECT_EQ(tqft_correlator(0, {x, y, unit}, E), E.eta(x, y));
            if (E.n == 2) {
                auto two = nakajima_coordinates(E, Partition{2});
                EXPECT_EQ(tqft_correlator(0, {x, two, y}, E), three_point_series(a, b, E.order));
            }
        }
    EXPECT_THROW(tqft_correlator(0, {unit, unit}, E), std::invalid_argument);
}

INSTANTIATE_TEST_SUITE_P(Levels, FrobeniusRing, ::testing::Values(Level{1, 4}, Level{2, 4}, Level{3, 3}),
                         [](const auto& info) { return "n" + std::to_string(info.param.n); });

TEST(FrobeniusRingLevelOne, TrivialRing) {
    auto E = eigen_decompose(1, 3);
    ASSERT_EQ(E.dim(), 1u);
    EXPECT_EQ(E.Delta[0], QSeries(t1 * t2, 3));
    EXPECT_TRUE(E.v[0].is_zero());
}
