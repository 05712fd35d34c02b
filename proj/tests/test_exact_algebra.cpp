/**
 * @file test_exact_algebra.cpp
 * @brief Rationals, bivariate rational functions, the i/sqrt(t1 t2) extension,
 *        truncated series, Bernoulli numbers and rational reconstruction.
 */
#include "hilbgw/bernoulli.hpp"
#include "hilbgw/ext_scalar.hpp"
#include "hilbgw/reconstruct.hpp"
#include "hilbgw/scalar.hpp"
#include "hilbgw/series.hpp"
#include "hilbgw/upoly.hpp"

#include <gtest/gtest.h>

using namespace hilbgw;

namespace {
const Scalar t1 = Scalar::t1();
const Scalar t2 = Scalar::t2();
}  // namespace

TEST(Rational, CanonicalFormAndParse) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Scalar, FieldOperationsReduce) {
    Scalar x = (t1 * t1 - t2 * t2) / (t1 - t2);
    EXPECT_EQ(x, t1 + t2);
    EXPECT_EQ((t1 / t2) * (t2 / t1), Scalar(1));
    EXPECT_EQ(Scalar(1) / (t1 + t2) + Scalar(1) / (t1 - t2), Scalar(2) * t1 / (t1 * t1 - t2 * t2));
    EXPECT_TRUE((t1 - t1).is_zero());
    EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
}

TEST(Scalar, NonHomogeneousGcd) {
    Scalar a = (Scalar(3) + t1 - Scalar(2) * t2) * (Scalar(1) + t1 * t2);
    Scalar b = (Scalar(3) + t1 - Scalar(2) * t2) * (t1 - Scalar(5));
    EXPECT_EQ(a / b, (Scalar(1) + t1 * t2) / (t1 - Scalar(5)));
}

TEST(Scalar, StringRoundTripAndInvolutions) {
    Scalar x = (t1 * t1 + Scalar(3) * t2) / (Scalar(7) * t1 - t2);
    EXPECT_EQ(Scalar::parse(x.str()), x);
    EXPECT_EQ(x.swap_variables().swap_variables(), x);
    EXPECT_EQ(t1.conj(), -t1);
    EXPECT_EQ((t1 * t2).conj(), t1 * t2);
    EXPECT_EQ(x.evaluate<Rational>(Rational(1), Rational(2)), Rational(7, 5));
}

TEST(ExtScalar, GaussianAndSquareRoot) {
    ExtScalar i = ExtScalar::i(), s = ExtScalar::s();
    EXPECT_EQ(i * i, ExtScalar(-1));
    EXPECT_EQ(s * s, ExtScalar(t1 * t2));
    EXPECT_EQ((i + s) / (i + s), ExtScalar(1));
    EXPECT_EQ((-i).pow(-1), i);
    EXPECT_THROW((void)(i * s).project(), std::domain_error);
    EXPECT_EQ(ExtScalar(t1).project(), t1);
}

TEST(Series, ExpLogInverseCompose) {
    Series<Rational> x = Series<Rational>::variable(6);
    auto e = series_exp(x);
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(e[k], Rational(1) / factorial(k));
    EXPECT_EQ(series_log(e), x);
    auto one_minus = Series<Rational>(Rational(1), 6) - x;
    auto geo = one_minus.inverse();
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(geo[k], Rational(1));
    EXPECT_EQ((geo * one_minus)[0], Rational(1));
    EXPECT_TRUE((geo * one_minus - Series<Rational>(Rational(1), 6)).is_zero());
    // exp(log(1 + x)) composed the other way
    auto l = series_log(Series<Rational>(Rational(1), 6) + x);
    EXPECT_EQ(series_exp(l), Series<Rational>(Rational(1), 6) + x);
    EXPECT_EQ(x.compose(x + x * x), x + x * x);
}

TEST(Series, EulerDerivativeAndIntegral) {
    Series<Scalar> s(std::vector<Scalar>{Scalar(5), t1, t2, t1 * t2});
    auto d = s.euler_derivative();
    EXPECT_EQ(d[0], Scalar(0));
    EXPECT_EQ(d[3], Scalar(3) * t1 * t2);
    EXPECT_EQ(d.euler_integral(Scalar(5)), s);
}

TEST(Bernoulli, Numbers) {
    EXPECT_EQ(bernoulli_number(0), Rational(1));
    EXPECT_EQ(bernoulli_number(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli_number(2), Rational(1, 6));
    EXPECT_EQ(bernoulli_number(3), Rational(0));
    EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
}

TEST(Bernoulli, Polynomials) {
    EXPECT_EQ(bernoulli_polynomial(2, Rational(1, 3)), Rational(-1, 18));
    for (int m = 0; m <= 8; ++m) EXPECT_EQ(bernoulli_polynomial(m, Rational(0)), bernoulli_number(m));
    // B_m(1 - x) = (-1)^m B_m(x)
    for (int m = 0; m <= 8; ++m) {
        Rational x(2, 7);
        Rational lhs = bernoulli_polynomial(m, Rational(1) - x);
        Rational rhs = bernoulli_polynomial(m, x);
        EXPECT_EQ(lhs, m % 2 ? -rhs : rhs);
    }
}

TEST(UniPoly, DivisionAndGcd) {
    using P = UniPoly<Scalar>;
    P x = P::variable();
    P a = (x - P(1)) * (x + P(2)), b = (x - P(1)) * (x - P(3));
    EXPECT_EQ(poly_gcd(a, b), x - P(1));
    EXPECT_EQ(a / (x + P(2)), x - P(1));
    EXPECT_THROW((void)(a / (x - P(7))), std::domain_error);
}

TEST(RationalReconstruct, RecoversKnownForm) {
    auto ratio = [](int order) {
        QSeries num(order), den(order);
        num[0] = Scalar(1);
        num[1] = t1;
        den[0] = Scalar(1);
        den[1] = -t2;
        den[2] = Scalar(-1);
        return num * den.inverse();
    };
    RationalQ f = rational_reconstruct(ratio(8), 2);
    EXPECT_EQ(f.expand(12), ratio(12));
    EXPECT_EQ(f.den.coeff(0), Scalar(1));
    EXPECT_EQ(f.den.degree(), 2);
}

TEST(RationalReconstruct, ConstantAndInsufficientData) {
    QSeries c(Scalar(3) * t1, 6);
    RationalQ f = rational_reconstruct(c, 2);
    EXPECT_EQ(f.den.degree(), 0);
    EXPECT_EQ(f.num.coeff(0), Scalar(3) * t1);
    EXPECT_THROW(rational_reconstruct(QSeries(3), 2), InsufficientCoefficients);
}
