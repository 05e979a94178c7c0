#include "ballcalc/qseries.hpp"

#include <gtest/gtest.h>

using namespace ballcalc;

namespace {

// Ramanujan tau(n) for n = 1..6
const long kTau[] = {1, -24, 252, -1472, 4830, -6048};

}  // namespace

TEST(QSeries, DeltaMatchesRamanujanTau) {
    QSeries d = delta_series(7);
    for (long n = 1; n <= 6; ++n) EXPECT_EQ(d.coeff(n), CycNum(kTau[n - 1])) << n;
    EXPECT_EQ(d.coeff(0), CycNum(0));
    EXPECT_THROW(d.coeff(7), std::out_of_range);
}

TEST(QSeries, InverseDelta) {
    QSeries inv = delta_series(5).inverse();
    EXPECT_EQ(*inv.leading_exponent(), -1);
    EXPECT_EQ(inv.coeff(-1), CycNum(1));
    EXPECT_EQ(inv.coeff(0), CycNum(24));
    EXPECT_EQ(inv.coeff(1), CycNum(324));
    EXPECT_EQ(inv.coeff(2), CycNum(3200));
    EXPECT_EQ(*inv.truncation(), 3);
}

TEST(QSeries, EtaCubedIsJacobi) {
    // eta^3 = sum (-1)^k (2k+1) q^((2k+1)^2/8)
    QSeries e = eta_power(3, 7);
    EXPECT_EQ(e.coeff(rat(1, 8)), CycNum(1));
    EXPECT_EQ(e.coeff(rat(9, 8)), CycNum(-3));
    EXPECT_EQ(e.coeff(rat(25, 8)), CycNum(5));
    EXPECT_EQ(e.coeff(rat(49, 8)), CycNum(-7));
    EXPECT_EQ(e.coeff(rat(17, 8)), CycNum(0));
}

TEST(QSeries, EtaEighth) {
    QSeries e = eta_power(8, 3);
    EXPECT_EQ(e.grid(), 3);
    EXPECT_EQ(e.coeff(rat(1, 3)), CycNum(1));
    EXPECT_EQ(e.coeff(rat(4, 3)), CycNum(-8));
    EXPECT_EQ(e.coeff(rat(7, 3)), CycNum(20));
}

TEST(QSeries, TruncationPropagates) {
    QSeries a = QSeries::monomial(CycNum(1), 0, Rational(5));
    QSeries b = QSeries::monomial(CycNum(2), rat(1, 3), Rational(2));
    QSeries s = a + b;
    EXPECT_EQ(*s.truncation(), 2);
    // a * b is known below min(5 + 1/3, 2 + 0)
    QSeries p = a * b;
    EXPECT_EQ(*p.truncation(), 2);
    QSeries lowered = s.truncate(rat(1, 3));
    EXPECT_EQ(lowered.coeff(0), CycNum(1));
    EXPECT_FALSE(lowered.known(rat(1, 3)));
    EXPECT_TRUE(s.truncate(0).is_zero());
}

TEST(QSeries, ExactSeriesMultiplyExactly) {
    QSeries x = QSeries::constant(CycNum(1)) + QSeries::monomial(CycNum(-1), 1);
    QSeries sq = x * x;
    EXPECT_TRUE(sq.exact());
    EXPECT_EQ(sq.coeff(2), CycNum(1));
    EXPECT_EQ(sq.coeff(1), CycNum(-2));
    EXPECT_EQ(sq.coeff(100), CycNum(0));
}

TEST(QSeries, InverseOfExactSeriesNeedsTruncation) {
    QSeries x = QSeries::constant(CycNum(1)) + QSeries::monomial(CycNum(-1), 1);
    EXPECT_THROW(x.inverse(), std::domain_error);
    QSeries geo = x.truncate(6).inverse();
    for (long n = 0; n < 6; ++n) EXPECT_EQ(geo.coeff(n), CycNum(1));
}

TEST(QSeries, CyclotomicCoefficients) {
    QSeries a = QSeries::monomial(CycNum::w(), rat(2, 3), Rational(3));
    QSeries b = QSeries::monomial(CycNum::w(), rat(1, 3), Rational(3));
    EXPECT_EQ((a * b).coeff(1), CycNum::w2());
    EXPECT_EQ((a + b).grid(), 3);
}

TEST(QSeries, EvaluateDeltaAtI) {
    // Delta(i) = Gamma(1/4)^24 / (2^24 pi^18)
    const double g = std::tgamma(0.25), pi = 3.141592653589793;
    double expect = std::pow(g, 24) / (std::pow(2.0, 24) * std::pow(pi, 18));
    double got = delta_series(12).evaluate({0, 1}).real();
    EXPECT_NEAR(got / expect, 1.0, 1e-9);
}

TEST(QSeries, Printing) {
    QSeries inv = delta_series(4).inverse();
    EXPECT_EQ(inv.to_string(), "q^-1 + 24 + 324*q + O(q^2)");
    EXPECT_EQ(eta_power(8, 3).to_string(), "q^(1/3) - 8*q^(4/3) + 20*q^(7/3) + O(q^3)");
}
