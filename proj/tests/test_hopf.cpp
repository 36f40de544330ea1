#include <gtest/gtest.h>

#include "suq2/hopf.hpp"

using namespace suq2;

namespace {

NCPoly G(const char* s) { return parse_poly(algebra_G(), s); }

}  // namespace

TEST(Hopf, StructureMapsOnGenerators) {
  EXPECT_EQ(coproduct(G("a")).to_string(), "a (x) a + b (x) c");
  EXPECT_EQ(counit(G("a")), QScalar(1));
  EXPECT_EQ(counit(G("b")), QScalar(0));
  EXPECT_EQ(antipode(G("a")), G("d"));
  EXPECT_EQ(antipode(G("b")), G("-q^-1 b"));
  EXPECT_EQ(antipode(G("c")), G("-q c"));
  EXPECT_EQ(antipode(G("d")), G("a"));
}

TEST(Hopf, StarOnGenerators) {
  EXPECT_EQ(star(G("a")), G("d"));
  EXPECT_EQ(star(G("b")), G("-q c"));
  EXPECT_EQ(star(G("c")), G("-q^-1 b"));
  EXPECT_EQ(star(G("d")), G("a"));
}

TEST(Hopf, StarIsAntimultiplicativeInvolution) {
  const std::vector<NCPoly> xs = {G("a b"), G("c d + 2 a"), G("b c d"), G("a^2 c + q b")};
  for (const auto& x : xs) {
    EXPECT_EQ(star(star(x)), x);
    for (const auto& y : xs) EXPECT_EQ(star(x * y), star(y) * star(x));
  }
}

TEST(Hopf, AntipodeIsUnique) {
  const AntipodeSolution s = solve_antipode_G();
  EXPECT_TRUE(s.unique);
  for (int g = kA; g <= kD; ++g) EXPECT_EQ(s.antipode.image(g), hopf_G().antipode.image(g));
}

TEST(Hopf, GroupLikes) {
  EXPECT_TRUE(is_group_like(NCPoly::gen(algebra_borel(), kLambda, 3)));
  EXPECT_TRUE(is_group_like(NCPoly::gen(algebra_borel(), kLambda, -2)));
  EXPECT_FALSE(is_group_like(NCPoly::gen(algebra_borel(), kXi)));
}

TEST(Hopf, AxiomSuites) {
  const Report g = verify_hopf(hopf_G(), 3, 20, 5);
  EXPECT_TRUE(g.all_pass()) << g.to_text();
  const Report b = verify_hopf(hopf_borel(), 3, 20, 5);
  EXPECT_TRUE(b.all_pass()) << b.to_text();
  EXPECT_EQ(b.count(Status::Skipped), 1u);
  const Report p = verify_projection(3);
  EXPECT_TRUE(p.all_pass()) << p.to_text();
}

TEST(Hopf, CorruptedCoproductIsCaught) {
  const Report r = verify_hopf(corrupted_hopf_G(), 2, 10, 5);
  EXPECT_FALSE(r.all_pass());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_FALSE(r.first_failure()->witness.empty());
}

TEST(Hopf, StarRejectsLocalizedMonomials) {
  EXPECT_THROW(star(parse_poly(algebra_G_b(), "b^-1")), DomainError);
}
