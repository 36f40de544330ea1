#include <gtest/gtest.h>

#include <random>

#include "suq2/scalar.hpp"

using namespace suq2;

namespace {

QScalar random_scalar(std::mt19937_64& rng) {
  std::vector<mpz_class> n(rng() % 4 + 1), d(rng() % 3 + 1);
  for (auto& c : n) c = static_cast<long>(rng() % 7) - 3;
  for (auto& c : d) c = static_cast<long>(rng() % 5) + 1;
  return QScalar(IntPoly(n), IntPoly(d)) * QScalar::q_pow(static_cast<long>(rng() % 5) - 2);
}

}  // namespace

TEST(Scalars, QNumbersAreSymmetric) {
  EXPECT_EQ(q_number(1), QScalar(1));
  EXPECT_EQ(q_number(2), parse_scalar("q + q^-1"));
  EXPECT_EQ(q_number(3), parse_scalar("q^2 + 1 + q^-2"));
  EXPECT_EQ(q_number(3).to_string(), "q^2 + 1 + q^-2");
}

TEST(Scalars, GaussianBinomialSmallValues) {
  const QScalar t = QScalar::q_pow(-2);
  EXPECT_EQ(gauss_binomial(2, 1, t), parse_scalar("1 + q^-2"));
  EXPECT_EQ(gauss_binomial(4, 2, t), parse_scalar("1 + q^-2 + 2 q^-4 + q^-6 + q^-8"));
  EXPECT_EQ(gauss_binomial(5, 0, t), QScalar(1));
  EXPECT_EQ(gauss_binomial(5, 5, t), QScalar(1));
}

TEST(Scalars, GaussianBinomialPascalRule) {
  const QScalar t = QScalar::q_pow(-2);
  for (long n = 1; n <= 7; ++n)
    for (long k = 1; k < n; ++k)
      EXPECT_EQ(gauss_binomial(n, k, t), gauss_binomial(n - 1, k - 1, t) + t.pow(k) * gauss_binomial(n - 1, k, t));
}

TEST(Scalars, BaseNumberMatchesSymmetricNumber) {
  // [n]_{q^-2} = q^(1-n) [n]_q
  for (long n = 1; n <= 8; ++n) EXPECT_EQ(base_number(n, QScalar::q_pow(-2)), QScalar::q_pow(1 - n) * q_number(n));
}

TEST(Scalars, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (int s = 0; s < 60; ++s) {
    const QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(parse_scalar(a.to_string()), a);
  }
}

TEST(Scalars, SpecializeIsAHomomorphism) {
  std::mt19937_64 rng(8);
  const QRational q0(1, 2);
  for (int s = 0; s < 40; ++s) {
    const QScalar a = random_scalar(rng), b = random_scalar(rng);
    EXPECT_EQ(specialize(a * b, q0), specialize(a, q0) * specialize(b, q0));
    EXPECT_EQ(specialize(a + b, q0), specialize(a, q0) + specialize(b, q0));
  }
  EXPECT_EQ(specialize(parse_scalar("q^2/(q^2 + 1)"), q0), QRational(1, 5));
}

TEST(Scalars, SpecializeAtPoleThrows) {
  EXPECT_THROW(specialize(parse_scalar("1/(q - 1)"), QRational(1)), DomainError);
}

TEST(Scalars, ParseErrors) {
  EXPECT_THROW(parse_scalar("q +"), ParseError);
  EXPECT_THROW(parse_scalar("(q"), ParseError);
  EXPECT_ANY_THROW(parse_scalar("1/0"));
}

TEST(Scalars, PochhammerExpansion) {
  const QScalar t = QScalar::q_pow(-2);
  const ScalarPoly p = q_pochhammer(t, t, 2);
  // (1 - t x)(1 - t^2 x)
  EXPECT_EQ(p.coeff(0), QScalar(1));
  EXPECT_EQ(p.coeff(1), -(t + t * t));
  EXPECT_EQ(p.coeff(2), t * t * t);
}

TEST(Scalars, JacksonIntegralOfMonomials) {
  // int_0^1 x^k d_p x = (1 - p) / (1 - p^(k+1))
  const QScalar p = QScalar::q_pow(-2);
  for (std::size_t k = 0; k <= 5; ++k)
    EXPECT_EQ(jackson_integral_01(ScalarPoly::monomial(QScalar(1), k), p),
              (QScalar(1) - p) / (QScalar(1) - p.pow(static_cast<long>(k) + 1)));
}

TEST(Scalars, QGammaAtIntegers) {
  const QScalar t = QScalar::q_pow(-2);
  EXPECT_EQ(q_gamma_int(1, t), QScalar(1));
  EXPECT_EQ(q_gamma_int(2, t), QScalar(1));
  EXPECT_EQ(q_gamma_int(3, t), QScalar(1) + t);
}
