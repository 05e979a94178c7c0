#include "ballcalc/scalars.hpp"

#include <gtest/gtest.h>

using namespace ballcalc;

TEST(Rational, CanonicalConstruction) {
    EXPECT_EQ(rat(6, -4), rat(-3, 2));
    EXPECT_EQ(to_string(rat(10, 5)), "2");
    EXPECT_EQ(to_string(rat(-3, 9)), "-1/3");
    EXPECT_THROW(rat(1, 0), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "-7", "5/3", "-2/11", "118098/671"}) EXPECT_EQ(to_string(parse_rational(s)), s);
    EXPECT_EQ(parse_rational("4/6"), rat(2, 3));
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Rational, FloorAndMod) {
    EXPECT_EQ(floor_q(rat(-1, 3)), -1);
    EXPECT_EQ(floor_q(rat(7, 2)), 3);
    EXPECT_EQ(mod_q(rat(-2, 3), 2), rat(4, 3));
    EXPECT_EQ(mod_q(rat(7, 3), 1), rat(1, 3));
}

TEST(Rational, PadicValuation) {
    EXPECT_EQ(*padic_valuation(rat(1, 81), 3), -4);
    EXPECT_EQ(*padic_valuation(rat(54, 5), 3), 3);
    EXPECT_FALSE(padic_valuation(Rational(0), 3).has_value());
}

TEST(Rational, Bernoulli) {
    auto b = bernoulli_numbers(10);
    EXPECT_EQ(b[1], rat(-1, 2));
    EXPECT_EQ(b[2], rat(1, 6));
    EXPECT_EQ(b[6], rat(1, 42));
    EXPECT_EQ(b[10], rat(5, 66));
    EXPECT_EQ(b[7], 0);
}

TEST(Integer, Combinatorics) {
    EXPECT_EQ(binomial(12, 6), 924);
    EXPECT_EQ(factorial(12), 479001600);
    EXPECT_EQ(pow_z(3, 10), 59049);
    EXPECT_TRUE(is_prime(61));
    EXPECT_FALSE(is_prime(671));
}

TEST(CycNum, RootOfUnityRelations) {
    CycNum w = CycNum::w();
    EXPECT_EQ(w * w, CycNum::w2());
    EXPECT_EQ(w * w * w, CycNum(1));
    EXPECT_EQ(CycNum(1) + w + w * w, CycNum(0));
    EXPECT_EQ(CycNum::sqrt_m3() * CycNum::sqrt_m3(), CycNum(-3));
    EXPECT_EQ(w.conj(), CycNum::w2());
    EXPECT_EQ(CycNum::w_pow(-1), CycNum::w2());
    EXPECT_EQ(CycNum::w_pow(5), CycNum::w2());
}

TEST(CycNum, FieldOperations) {
    CycNum x(rat(2, 3), rat(-5, 7));
    EXPECT_EQ(x * x.inverse(), CycNum(1));
    EXPECT_EQ(x.norm(), (x * x.conj()).a);
    EXPECT_TRUE((x * x.conj()).is_rational());
    EXPECT_THROW(CycNum(0).inverse(), std::domain_error);
}

TEST(CycNum, ExpPiI) {
    EXPECT_EQ(CycNum::exp_pi_i(rat(2, 3)), CycNum::w());
    EXPECT_EQ(CycNum::exp_pi_i(rat(-2, 3)), CycNum::w2());
    EXPECT_EQ(CycNum::exp_pi_i(1), CycNum(-1));
    EXPECT_EQ(CycNum::exp_pi_i(rat(1, 3)), -CycNum::w2());
    EXPECT_THROW(CycNum::exp_pi_i(rat(1, 2)), std::domain_error);
}

TEST(CycNum, ComplexEmbedding) {
    auto z = CycNum::w().to_complex();
    EXPECT_NEAR(z.real(), -0.5, 1e-15);
    EXPECT_NEAR(z.imag(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(CycNum, Printing) {
    EXPECT_EQ(to_string(CycNum::w2()), "-1-w");
    EXPECT_EQ(to_string(CycNum(rat(1, 2))), "1/2");
    EXPECT_EQ(to_string(CycNum::w()), "w");
}
