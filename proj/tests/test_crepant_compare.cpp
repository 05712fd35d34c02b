/**
 * @file test_crepant_compare.cpp
 * @brief Boundary data of the symmetric-product side and the substitution
 *        -q = e^{iu}.
 */
#include "hilbgw/crepant.hpp"

#include <gtest/gtest.h>

using namespace hilbgw;

namespace {

const Scalar t1 = Scalar::t1();
const Scalar t2 = Scalar::t2();
const ExtScalar I = ExtScalar::i();

RationalQ genus1_form() {
    Scalar c = Scalar(Rational(-1, 24)) * (t1 + t2) * (t1 + t2) / (t1 * t2);
    return {UniPoly<Scalar>(std::vector<Scalar>{c, c}), UniPoly<Scalar>(std::vector<Scalar>{Scalar(1), Scalar(-1)})};
}

}  // namespace

TEST(SymmetricProduct, FirstOrderCoefficient) {
    for (const auto& mu : enumerate_partitions(4)) {
        Scalar inv;
        for (int p : mu.parts()) inv += Scalar(Rational(1, p));
        EXPECT_EQ(sym_R_u0_entry(mu, 3)[1], Scalar(Rational(-1, 12)) * inv * (Scalar(1) / t1 + Scalar(1) / t2)) << mu.str();
    }
}

TEST(SymmetricProduct, BernoulliPolynomialFormAgrees) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : enumerate_partitions(n))
            EXPECT_EQ(sym_R_u0_entry(mu, 5), sym_R_u0_entry_bernoulli_polynomial(mu, 5)) << mu.str();
}

TEST(SymmetricProduct, DiagonalIsSymplectic) {
    for (const auto& mu : enumerate_partitions(3)) {
        auto e = sym_R_u0_entry(mu, 6);
        EXPECT_EQ(e.rescale(Scalar(-1)) * e, Series<Scalar>(Scalar(1), 6)) << mu.str();
    }
    EXPECT_EQ(sym_R_u0_entry(Partition{2}, 0), Series<Scalar>(Scalar(1), 0));
    EXPECT_EQ(sym_R_u0(3, 2).size(), 3u);
}

TEST(SymmetricProduct, CharacterIdempotentsOrthonormal) {
    for (int n = 1; n <= 4; ++n) {
        auto idem = sym_idempotents(n);
        for (std::size_t a = 0; a < idem.size(); ++a)
            for (std::size_t b = 0; b < idem.size(); ++b)
                EXPECT_EQ(sym_pairing(n, idem[a], idem[b]), ExtScalar(a == b ? 1 : 0)) << "n=" << n;
    }
}

TEST(SymmetricProduct, RescaledBasisTransportsPairing) {
    EXPECT_EQ(mu_tilde_factor(Partition{2}), I);
    EXPECT_EQ(mu_tilde_factor(Partition{1, 1}), ExtScalar(1));
    EXPECT_EQ(mu_tilde_factor(Partition{3}), ExtScalar(-1));
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(mu_tilde_transport(n)) << "n=" << n;
}

TEST(SymmetricProduct, AnchorColumnFormsAgree) {
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(anchor_comparison(n, 5)) << "n=" << n;
}

TEST(Substitution, ConstantForm) {
    RationalQ form{UniPoly<Scalar>(std::vector<Scalar>{t1}), UniPoly<Scalar>(std::vector<Scalar>{Scalar(1)})};
    auto rep = crepant_substitute(form, {Partition{1, 1}}, 4);
    EXPECT_FALSE(rep.pole_at_minus_one);
    EXPECT_EQ(rep.prefactor_exponent, 0);
    EXPECT_EQ(rep.u_expansion[0], ExtScalar(t1));
    for (int k = 1; k <= 4; ++k) EXPECT_TRUE(rep.u_expansion[k].is_zero());
    EXPECT_TRUE(crepant_round_trip(rep));
}

TEST(Substitution, GenusOneForm) {
    auto form = genus1_form();
    auto rep = crepant_substitute(form, {Partition{2}}, 6);
    ASSERT_FALSE(rep.pole_at_minus_one);
    EXPECT_EQ(rep.prefactor_exponent, -1);
    Scalar c = form.num.coeff(0);
    // (1 - e^{iu}) / (1 + e^{iu}) = -i tan(u/2)
    EXPECT_TRUE(rep.u_expansion[0].is_zero());
    EXPECT_EQ(rep.u_expansion[1], -I * ExtScalar(c / Scalar(2)));
    EXPECT_EQ(rep.u_expansion[3], -I * ExtScalar(c / Scalar(24)));
    EXPECT_EQ(rep.prediction[1], ExtScalar(c / Scalar(2)));
    EXPECT_TRUE(crepant_round_trip(rep));
}

TEST(Substitution, PoleAtMinusOneFlagged) {
    RationalQ form{UniPoly<Scalar>(std::vector<Scalar>{Scalar(1)}), UniPoly<Scalar>(std::vector<Scalar>{Scalar(1), Scalar(1)})};
    auto rep = crepant_substitute(form, {Partition{2}}, 3);
    EXPECT_TRUE(rep.pole_at_minus_one);
    EXPECT_FALSE(crepant_round_trip(rep));
}
