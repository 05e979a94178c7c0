#include "ballcalc/kirwan.hpp"

#include <gtest/gtest.h>

using namespace ballcalc;

namespace {

PoincarePoly even_poly(std::vector<long> c, int cutoff) {
    PoincarePoly p(cutoff);
    for (std::size_t i = 0; i < c.size(); ++i) p.set(static_cast<int>(2 * i), c[i]);
    return p;
}

}  // namespace

TEST(PoincarePoly, ArithmeticRespectsTruncation) {
    PoincarePoly g = PoincarePoly::geometric(2, 7);
    EXPECT_EQ(g[0], 1);
    EXPECT_EQ(g[6], 1);
    EXPECT_THROW(g[8], std::out_of_range);
    PoincarePoly sq = (g * g).truncate(7);
    EXPECT_EQ(sq[6], 4);
    EXPECT_EQ(*sq.truncation(), 7);
    PoincarePoly exact = PoincarePoly::monomial(2) + PoincarePoly::monomial(4, 3);
    EXPECT_FALSE(exact.truncation().has_value());
    EXPECT_EQ((exact + g).truncation(), 7);
}

TEST(PoincarePoly, Printing) {
    EXPECT_EQ(even_poly({1, 1, 2, 2, 3}, 10).to_string(), "1 + t^2 + 2*t^4 + 2*t^6 + 3*t^8 mod t^10");
}

TEST(Strata, DegreeTwelve) {
    auto s = kirwan_strata(12);
    EXPECT_EQ(s.beta.size(), 7u);
    EXPECT_EQ(s.codim.at(2), 6);
    EXPECT_EQ(s.codim.at(12), 11);
    EXPECT_EQ(s.min_nonzero_2d, 12);
    EXPECT_EQ(s.argmin, 2);
    EXPECT_THROW(kirwan_strata(7), std::invalid_argument);
}

TEST(Equivariant, SemistableSeriesModT10) {
    EXPECT_EQ(equivariant_series_ss(12, 10), even_poly({1, 1, 2, 2, 3}, 10));
    EXPECT_NO_THROW(equivariant_series_ss(12, 12));
    EXPECT_THROW(equivariant_series_ss(12, 14), std::invalid_argument);
}

TEST(Correction, MainTerm) {
    EXPECT_EQ(correction_main(10), even_poly({0, 1, 1, 2, 2}, 10));
    EXPECT_THROW(correction_main(12), std::invalid_argument);
}

TEST(Correction, ExtraTermBound) {
    EXPECT_EQ(correction_extra_bound(slice_weights_12(), b_rho_12()), 5);
    EXPECT_THROW(correction_extra_bound(slice_weights_12(), {-2, 0}), std::invalid_argument);
}

TEST(Betti, KirwanBlowup) {
    BettiTable b = kirwan_blowup_betti();
    EXPECT_EQ(b.even(), (std::vector<long>{1, 2, 3, 4, 5, 5, 4, 3, 2, 1}));
    EXPECT_TRUE(b.poincare_dual());
    EXPECT_TRUE(b.odd_vanish());
    EXPECT_EQ(b.complex_dim(), 9);
}

TEST(Betti, CompletionNeedsTheMiddleDegree) {
    EXPECT_THROW(betti_complete(even_poly({1, 1}, 4), 9), std::invalid_argument);
}

TEST(Betti, SwapInvariantsOfProductOfProjectiveSpaces) {
    EXPECT_EQ(invariant_product_cohomology(4).even(), (std::vector<long>{1, 1, 2, 2, 3, 2, 2, 1, 1}));
    // total dimension (n+1)(n+2)/2 for n = 4
    long total = 0;
    for (long x : invariant_product_cohomology(4).dims) total += x;
    EXPECT_EQ(total, 15);
}

TEST(Betti, ToroidalMatchesKirwan) {
    BettiTable t = toroidal_compactification_betti();
    EXPECT_EQ(t.even(), (std::vector<long>{1, 2, 3, 4, 5, 5, 4, 3, 2, 1}));
    EXPECT_EQ(t.dims, kirwan_blowup_betti().dims);
}

TEST(Betti, ToroidalRejectsDimensionMismatch) {
    EXPECT_THROW(toroidal_betti(cited_ih_bb(), invariant_product_cohomology(3)), std::invalid_argument);
}

TEST(Fixtures, CitedTablesArePoincareDual) {
    for (const auto& f : cited_betti_fixtures()) {
        EXPECT_TRUE(f.table.poincare_dual()) << f.space;
        EXPECT_FALSE(f.source.empty());
    }
}
