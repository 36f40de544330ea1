#include <gtest/gtest.h>

#include "suq2/charts.hpp"

using namespace suq2;

TEST(Charts, DChartGamma) {
  const Chart& d = chart(ChartId::D);
  EXPECT_EQ(d.gamma.gamma.image(kLambda), parse_poly(d.algebra, "d^-1"));
  EXPECT_EQ(d.gamma.gamma.inverse_image(kLambda), parse_poly(d.algebra, "d"));
  EXPECT_EQ(d.gamma.gamma.image(kXi), parse_poly(d.algebra, "c"));
  EXPECT_EQ(d.coinvariant_generator, parse_poly(d.algebra, "b d^-1"));
  EXPECT_FALSE(d.gauss.swap);
}

TEST(Charts, BChartGammaIsDerived) {
  const Chart& b = chart(ChartId::B);
  ASSERT_TRUE(b.gamma.consistent);
  EXPECT_TRUE(b.gamma.unique);
  EXPECT_EQ(b.gamma.gamma.image(kLambda), parse_poly(b.algebra, "-q b^-1"));
  EXPECT_EQ(b.gamma.gamma.inverse_image(kLambda), parse_poly(b.algebra, "-q^-1 b"));
  EXPECT_EQ(b.gamma.gamma.image(kXi), parse_poly(b.algebra, "-q^-1 a"));
  EXPECT_EQ(b.coinvariant_generator, parse_poly(b.algebra, "d b^-1"));
  EXPECT_TRUE(b.gauss.swap);
}

TEST(Charts, ForcedBetaIsInconsistent) { EXPECT_FALSE(build_gamma(ChartId::B, QScalar(1)).consistent); }

TEST(Charts, GaussDecompositionsAreExact) {
  EXPECT_FALSE(gauss_residual(gauss_decompose(ChartId::B), algebra_G_b()).has_value());
  EXPECT_FALSE(gauss_residual(gauss_decompose(ChartId::D), algebra_G_d()).has_value());
}

TEST(Charts, InvertedGeneratorsCoaction) {
  for (ChartId id : {ChartId::B, ChartId::D}) {
    const Chart& ch = chart(id);
    const NCPoly g = NCPoly::gen(ch.algebra, ch.inverted);
    const NCPoly gi = NCPoly::gen(ch.algebra, ch.inverted, -1);
    EXPECT_EQ(ch.coaction_B.apply(g) * ch.coaction_B.apply(gi), NCPoly::scalar(ch.square(), QScalar(1)));
    const PresentationPtr S = ch.square();
    EXPECT_EQ(ch.coaction_B.apply(gi), embed(gi, S, 0) * embed(NCPoly::gen(algebra_borel(), kLambda), S, 1));
  }
}

TEST(Charts, LocalizedCoinvariantsArePolynomialsInU) {
  for (ChartId id : {ChartId::B, ChartId::D})
    for (int deg = 2; deg <= 4; deg += 2) {
      const CoinvariantSlice s = localized_coinvariants(id, deg);
      EXPECT_TRUE(s.polynomial_in_generator);
      EXPECT_EQ(s.kernel.size(), static_cast<std::size_t>(deg / 2 + 1));
    }
}

TEST(Charts, CoverEqualizer) {
  for (int d = 1; d <= 4; ++d) {
    const EqualizerResult e = cover_equalizer(d);
    EXPECT_TRUE(e.ok()) << d << " " << e.witness;
  }
}

TEST(Charts, PerChartSuites) {
  for (ChartId id : {ChartId::B, ChartId::D}) {
    const Report r = verify_chart(id, 10, 3);
    EXPECT_TRUE(r.all_pass()) << r.to_text();
  }
}
