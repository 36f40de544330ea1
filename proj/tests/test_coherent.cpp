#include <gtest/gtest.h>

#include "suq2/coherent.hpp"
#include "suq2/errata.hpp"
#include "suq2/haar.hpp"

using namespace suq2;

TEST(Coherent, DChartNOne) {
  const CoherentFamily f = solve_coherent(ChartId::D, 1);
  EXPECT_TRUE(f.factorizes && f.coinvariant);
  EXPECT_EQ(f.element.to_string(), "y (x) 1 + x (x) b d^-1");
}

TEST(Coherent, DChartCoefficients) {
  const NCPoly u = chart(ChartId::D).coinvariant_generator;
  for (int n = 0; n <= 4; ++n) {
    const CoherentFamily f = solve_coherent(ChartId::D, n);
    for (int i = 0; i <= n; ++i)
      EXPECT_EQ(f.coeffs[static_cast<std::size_t>(i)], coherent_coefficient(n, i) * u.pow(i)) << n << " " << i;
  }
}

TEST(Coherent, BChartIsCoinvariant) {
  for (int n = 0; n <= 3; ++n) {
    const CoherentFamily f = solve_coherent(ChartId::B, n);
    EXPECT_TRUE(f.factorizes && f.coinvariant) << n;
  }
}

TEST(Coherent, MuDensity) {
  EXPECT_EQ(mu_density(ChartId::D, 1), parse_poly(algebra_G(), "1 + q^-1 b c"));
  EXPECT_EQ(mu_density(ChartId::D, 0), parse_poly(algebra_G(), "1"));
  EXPECT_EQ(haar(mu_density(ChartId::B, 1)), haar(parse_poly(algebra_G(), "-q^-1 b c")));
}

TEST(Coherent, ResolutionAlpha) {
  EXPECT_EQ(resolution_operator(0).alpha, QScalar(1));
  const ResolutionResult& r = resolution_operator(1);
  EXPECT_TRUE(r.scalar && r.chart_agreement);
  EXPECT_EQ(specialize(r.alpha, QRational(1, 2)), QRational(1, 5));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(resolution_operator(n).alpha, QScalar::q_pow(n) / q_number(n + 1));
}

TEST(Coherent, LemmaIntegrals) {
  EXPECT_EQ(lemma_integral(0, 0, 1), parse_scalar("q^2/(q^2 + 1)"));
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        if (i == j) EXPECT_EQ(lemma_integral(i, j, n), lemma_closed_form(i, n));
        else EXPECT_TRUE(lemma_integral(i, j, n).is_zero());
      }
}

TEST(Coherent, QBetaIntegral) {
  EXPECT_EQ(qbeta_integral(1, 1), parse_scalar("q^2/(q^2 + 1)"));
  // hand value at n=2, i=1
  EXPECT_EQ(qbeta_integral(1, 2), parse_scalar("q^6/((q^2 + 1)(q^4 + q^2 + 1))"));
  EXPECT_NE(qbeta_integral(1, 2), qbeta_stated(1, 2));
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) EXPECT_EQ(qbeta_integral(i, n), qbeta_inverse_binomial(i, n));
}

TEST(Coherent, Ramanujan) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const Report r = ramanujan_qbeta(a, b);
      EXPECT_TRUE(r.all_pass()) << r.to_text();
    }
}

TEST(Coherent, IntegrandOrders) {
  const std::vector<QScalar> w = {QScalar(1), QScalar(1)};
  EXPECT_TRUE(scalar_operator_general(1, w).scalar);
  EXPECT_FALSE(scalar_operator_general(1, {QScalar(0), QScalar(1)}, IntegrandOrder::Printed).scalar);
}

TEST(Coherent, ReproducingFormula) {
  const ScalarMatrix proj = {{QScalar(1), QScalar(0)}, {QScalar(0), QScalar(0)}};
  const std::vector<QScalar> v = {QScalar(1), QScalar(1)};
  EXPECT_EQ(reproducing_apply(1, proj, v), (std::vector<QScalar>{QScalar(1), QScalar(0)}));
}

TEST(Coherent, SectionProperty) {
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(section_property_check(n).all_pass()) << n;
}

TEST(Errata, AllResolved) {
  const Report r = verify_errata();
  EXPECT_TRUE(r.all_pass()) << r.to_text();
}
