#include <gtest/gtest.h>

#include "suq2/comod.hpp"

using namespace suq2;

TEST(Comod, CoactionOnGenerators) {
  EXPECT_EQ(coaction(NCPoly::gen(algebra_manin(), kX)).to_string(), "x (x) a + y (x) c");
  EXPECT_EQ(coaction(NCPoly::gen(algebra_manin(), kY)).to_string(), "x (x) b + y (x) d");
}

TEST(Comod, CoactionIsMultiplicative) {
  const NCPoly x = NCPoly::gen(algebra_manin(), kX);
  const NCPoly y = NCPoly::gen(algebra_manin(), kY);
  EXPECT_EQ(coaction(x * y), coaction(x) * coaction(y));
  EXPECT_EQ(coaction(y * x), coaction(y) * coaction(x));
}

TEST(Comod, ComoduleAxioms) {
  for (int n = 0; n <= 4; ++n) {
    const Report r = verify_comodule_axioms(n);
    EXPECT_TRUE(r.all_pass()) << r.to_text();
    EXPECT_EQ(vn(n).dim(), static_cast<std::size_t>(n + 1));
  }
}

TEST(Comod, WeightCovectorsAndIntertwiners) {
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(weight_covectors(n, NCPoly::gen(algebra_borel(), kLambda, -n)).size(), 1u) << n;
    EXPECT_EQ(intertwiner_dimension(n), 1u) << n;
  }
}

TEST(Comod, GramDiagonalIsInverseBinomial) {
  const QScalar t = QScalar::q_pow(-2);
  for (int n = 0; n <= 4; ++n) {
    const GramForm& g = gram(n);
    ASSERT_TRUE(g.solvable && g.unique && g.off_diagonal_zero) << n;
    for (int i = 0; i <= n; ++i) EXPECT_EQ(g.diag[static_cast<std::size_t>(i)] * gauss_binomial(n, i, t), QScalar(1));
    EXPECT_TRUE(g.orthonormal_claim());
    EXPECT_FALSE(gram_violation(g).has_value());
  }
}

TEST(Comod, PrintedOrderFailsOrthonormality) {
  const GramForm p = solve_gram_in_order(1, GramOrder::Printed);
  ASSERT_TRUE(p.solvable);
  EXPECT_EQ(p.diag[1], QScalar::q_pow(-2));
  EXPECT_FALSE(p.orthonormal_claim());
}

TEST(Comod, SchurScalar) {
  ScalarMatrix m = {{QScalar(3), QScalar(0)}, {QScalar(0), QScalar(3)}};
  EXPECT_TRUE(schur_scalar(m).scalar);
  EXPECT_EQ(schur_scalar(m).alpha, QScalar(3));
  m[0][1] = QScalar(1);
  EXPECT_FALSE(schur_scalar(m).scalar);
}

TEST(Comod, Suite) {
  const Report r = verify_comod(3);
  EXPECT_TRUE(r.all_pass()) << r.to_text();
}
