#include "ballcalc/borcherds.hpp"

#include <gtest/gtest.h>

using namespace ballcalc;

TEST(HeegnerCombo, ValidatesNormAgainstClass) {
    HeegnerCombo c("L_dm");
    EXPECT_NO_THROW(c.add("00", -2, 1));
    EXPECT_NO_THROW(c.add("4/3", rat(-2, 3), 1));
    EXPECT_THROW(c.add("4/3", rat(-4, 3), 1), std::invalid_argument);
    EXPECT_THROW(c.add("00", 0, 1), std::invalid_argument);
    EXPECT_THROW(c.add("00", 2, 1), std::invalid_argument);
}

TEST(HeegnerCombo, AddingAccumulatesAndCancels) {
    HeegnerCombo c("L_dm");
    c.add("00", -2, 2);
    c.add("00", -2, -2);
    EXPECT_TRUE(c.is_zero());
    HeegnerCombo d = ldm_combo(1, 27, 3);
    EXPECT_EQ(d.get("00", -2), 1);
    EXPECT_EQ(d.get("4/3", rat(-2, 3)), 27);
    EXPECT_EQ(d.get("2/3", rat(-4, 3)), 3);
    EXPECT_EQ(d.get("0", -2), 0);
}

TEST(Lift, OneOverDeltaOnTheEvenUnimodularLattice) {
    VVForm f;
    f.labels = {"00"};
    f.comp["00"] = delta_series(3).inverse();
    auto l = lift_weight_divisor(f, "II_2_26");
    EXPECT_EQ(l.weight, 12);
    EXPECT_EQ(l.divisor.get("00", -2), 1);
    EXPECT_EQ(l.divisor.entries().size(), 1u);
}

TEST(Lift, E4OverDelta) {
    VVForm f;
    f.labels = {"00"};
    f.comp["00"] = theta_series(build_standard("E8"), {}, 3) * delta_series(4).inverse();
    EXPECT_EQ(f["00"].coeff(0), CycNum(264));
    auto l = lift_weight_divisor(f, "II_2_18");
    EXPECT_EQ(l.weight, 132);
    EXPECT_EQ(l.divisor.get("00", -2), 1);
}

TEST(Lift, RejectsOddConstantTerm) {
    VVForm f;
    f.labels = {"00"};
    f.comp["00"] = QSeries::constant(CycNum(3), Rational(1));
    EXPECT_THROW(lift_weight_divisor(f, "II_2_26"), std::invalid_argument);
}

TEST(MaInput, Components) {
    VVForm f = ma_input(2);
    EXPECT_EQ(f["00"].coeff(-1), CycNum(1));
    EXPECT_EQ(f["00"].coeff(0), CycNum(102));
    EXPECT_EQ(f["00"].coeff(1), CycNum(2898));
    EXPECT_EQ(f["0"].coeff(0), CycNum(81));
    EXPECT_EQ(f["0"].coeff(1), CycNum(2673));
    EXPECT_EQ(f["4/3"].coeff(rat(-1, 3)), CycNum(27));
    EXPECT_EQ(f["4/3"].coeff(rat(2, 3)), CycNum(864));
    EXPECT_EQ(f["2/3"].coeff(rat(-2, 3)), CycNum(3));
    EXPECT_EQ(f["2/3"].coeff(rat(1, 3)), CycNum(75));
    EXPECT_TRUE(satisfies_t_law(f));
}

TEST(MaInput, LiftsToWeight51) {
    auto l = lift_weight_divisor(ma_input(1), "L_dm");
    EXPECT_EQ(l.weight, 51);
    EXPECT_EQ(l.divisor, ldm_combo(1, 27, 3));
}

TEST(ProductExistence, CertifiedMultiples) {
    for (long m = 1; m <= 5; ++m) {
        auto c = product_existence(ldm_combo(m, 27 * m, 3 * m));
        EXPECT_TRUE(c.exists) << m;
        EXPECT_EQ(c.weight, 51 * m) << m;
        EXPECT_TRUE(c.violated_pairings.empty());
    }
}

TEST(ProductExistence, RejectsWrongRatios) {
    auto c = product_existence(ldm_combo(1, 0, 0));
    EXPECT_FALSE(c.exists);
    ASSERT_EQ(c.violated_pairings.size(), 2u);
    EXPECT_EQ(c.violated_pairings[0].first, "case_a");
    EXPECT_EQ(c.violated_pairings[0].second, 99);
    EXPECT_EQ(c.violated_pairings[1].second, 3);
    for (auto combo : {ldm_combo(1, 26, 3), ldm_combo(1, 27, 4), ldm_combo(2, 27, 3)}) {
        auto r = product_existence(combo);
        EXPECT_FALSE(r.exists);
        ASSERT_FALSE(r.violated_pairings.empty());
        for (const auto& [id, v] : r.violated_pairings) EXPECT_NE(v, 0) << id;
    }
}

TEST(ProductExistence, EmptyComboHasWeightZero) {
    auto c = product_existence(HeegnerCombo("L_dm"));
    EXPECT_TRUE(c.exists);
    EXPECT_EQ(c.weight, 0);
}

TEST(ProductExistence, UnknownClassIsRejected) {
    HeegnerCombo c("other");
    c.add("1/2", rat(-3, 2), 1);
    EXPECT_THROW(product_existence(c), std::invalid_argument);
}

TEST(QuasiPullback, AgreesWithLifts) {
    auto q = quasi_pullback(build_standard("E6+A2"));
    EXPECT_EQ(q.positive_roots, 39);
    EXPECT_EQ(q.weight, 51);
    EXPECT_EQ(q.weight, lift_weight_divisor(ma_input(1), "L_dm").weight);
    auto e8 = quasi_pullback(build_standard("E8"));
    EXPECT_EQ(e8.weight, 132);
    EXPECT_EQ(e8.positive_roots, 120);
    EXPECT_EQ(quasi_pullback(Lattice{}).weight, 12);
}

TEST(QuasiPullback, DivisorFromShortDualVectors) {
    auto q = quasi_pullback(build_standard("E6+A2"));
    // 3 pairs of A2* vectors of norm -2/3 and 27 pairs of E6* vectors of norm -4/3
    EXPECT_EQ(q.divisor.get("00", -2), 1);
    EXPECT_EQ(q.divisor.get("2/3", rat(-4, 3)), 3);
    EXPECT_EQ(q.divisor.get("4/3", rat(-2, 3)), 27);
    Rational total = 0;
    for (const auto& [k, m] : q.divisor.entries()) total += m;
    EXPECT_EQ(total, 1 + 27 + 3);
}

TEST(BallRestriction, ScalesByThree) {
    auto b = ball_divisor(ldm_combo(1, 27, 3));
    EXPECT_EQ(b.nodal, 3);
    EXPECT_EQ(b.hyperelliptic, 3 * 28);
    EXPECT_EQ(b.vertical, 3 * 3);
}

TEST(AllcockForm, WeightAndMultiplicity) {
    auto a = allcock_form();
    EXPECT_EQ(a.weight, 44);
    EXPECT_EQ(a.multiplicity, 1);
}
