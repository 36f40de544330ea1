#include <gtest/gtest.h>

#include "suq2/haar.hpp"
#include "suq2/hopf.hpp"

using namespace suq2;

namespace {

NCPoly G(const char* s) { return parse_poly(algebra_G(), s); }

}  // namespace

TEST(Haar, HandValues) {
  EXPECT_EQ(haar(G("1")), QScalar(1));
  EXPECT_EQ(haar(G("d a")), parse_scalar("q^2/(q^2 + 1)"));
  EXPECT_EQ(haar(G("d") * star(G("d"))), parse_scalar("q^2/(q^2 + 1)"));
  EXPECT_EQ(haar(G("a d")), parse_scalar("1/(q^2 + 1)"));
  EXPECT_EQ(haar(G("b c")), parse_scalar("-q/(q^2 + 1)"));
  for (const char* s : {"a", "b", "c", "d", "a b", "a^2 d", "b c^2"}) EXPECT_TRUE(haar(G(s)).is_zero()) << s;
}

TEST(Haar, ZetaMoments) {
  // h(zeta^r) = (1 - q^-2)/(1 - q^-2(r+1)) = q^r/[r+1]_q
  for (int r = 0; r <= 6; ++r) {
    const QScalar p = QScalar::q_pow(-2);
    EXPECT_EQ(haar(zeta_power(r)), (QScalar(1) - p) / (QScalar(1) - p.pow(r + 1)));
    EXPECT_EQ(zeta_integral(r), QScalar::q_pow(r) / q_number(r + 1));
  }
}

TEST(Haar, StatedNegativePowerFormDoesNotHold) {
  EXPECT_EQ(haar(zeta_power(0)), QScalar(1));
  for (int r = 1; r <= 6; ++r) EXPECT_NE(haar(zeta_power(r)), QScalar::q_pow(-r) / q_number(r + 1)) << r;
}

TEST(Haar, OutsideGThrows) { EXPECT_THROW(haar(parse_poly(algebra_G_d(), "d^-1")), DomainError); }

TEST(Haar, Invariance) {
  const Report r = verify_invariance(3);
  EXPECT_TRUE(r.all_pass()) << r.to_text();
}

TEST(Haar, Positivity) {
  const Report r = verify_positivity(QRational(1, 2), 20, 3, 4);
  EXPECT_TRUE(r.all_pass()) << r.to_text();
}
