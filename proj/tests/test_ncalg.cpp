#include <gtest/gtest.h>

#include <random>

#include "suq2/ncpoly.hpp"
#include "suq2/rewrite.hpp"

using namespace suq2;

namespace {

NCPoly G(const char* s) { return parse_poly(algebra_G(), s); }

}  // namespace

TEST(NCAlg, SlqRelations) {
  EXPECT_EQ(G("b a"), G("q^-1 a b"));
  EXPECT_EQ(G("c a"), G("q^-1 a c"));
  EXPECT_EQ(G("d b"), G("q^-1 b d"));
  EXPECT_EQ(G("d c"), G("q^-1 c d"));
  EXPECT_EQ(G("c b"), G("b c"));
  EXPECT_EQ(G("a d - q b c"), G("1"));
  EXPECT_EQ(G("d a - q^-1 b c"), G("1"));
  EXPECT_EQ(G("d a").to_string(), "1 + q^-1 b c");
}

TEST(NCAlg, MultiplicationIsAssociative) {
  std::mt19937_64 rng(3);
  const PresentationPtr& A = algebra_G();
  for (int s = 0; s < 40; ++s) {
    const NCPoly x = engine_word(A, random_word(*A, 3, rng));
    const NCPoly y = engine_word(A, random_word(*A, 3, rng));
    const NCPoly z = engine_word(A, random_word(*A, 3, rng));
    EXPECT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(NCAlg, LocalizedInverses) {
  EXPECT_EQ(parse_poly(algebra_G_b(), "b b^-1"), parse_poly(algebra_G_b(), "1"));
  EXPECT_EQ(parse_poly(algebra_G_d(), "d^-1 d"), parse_poly(algebra_G_d(), "1"));
  EXPECT_EQ(parse_poly(algebra_G_d(), "a"), parse_poly(algebra_G_d(), "d^-1 + q b c d^-1"));
  EXPECT_EQ(parse_poly(algebra_G_bd(), "b d^-1 d b^-1"), parse_poly(algebra_G_bd(), "1"));
}

TEST(NCAlg, NonInvertibleGeneratorRejected) {
  EXPECT_THROW(parse_poly(algebra_G(), "b^-1"), DomainError);
  EXPECT_THROW(parse_poly(algebra_G_b(), "d^-1"), DomainError);
}

TEST(NCAlg, ManinAndBorel) {
  EXPECT_EQ(parse_poly(algebra_manin(), "y x"), parse_poly(algebra_manin(), "q^-1 x y"));
  EXPECT_EQ(parse_poly(algebra_borel(), "lambda xi"), parse_poly(algebra_borel(), "q xi lambda"));
  EXPECT_EQ(parse_poly(algebra_borel(), "lambda lambda^-1"), parse_poly(algebra_borel(), "1"));
}

TEST(NCAlg, PrintParseRoundTrip) {
  std::mt19937_64 rng(4);
  for (const char* name : {"G", "G_b", "G_d", "G_bd", "Borel", "Manin"}) {
    const PresentationPtr A = algebra_by_name(name);
    for (int s = 0; s < 20; ++s) {
      const NCPoly x = engine_word(A, random_word(*A, 4, rng)) + engine_word(A, random_word(*A, 3, rng));
      EXPECT_EQ(parse_poly(A, x.to_string()), x) << name << ": " << x;
    }
  }
}

TEST(NCAlg, BasisSizes) {
  // a^i b^j c^k or b^j c^k d^l: degree-exactly-m count is (m+1)^2
  std::size_t total = 0;
  for (int m = 0; m <= 4; ++m) total += static_cast<std::size_t>((m + 1) * (m + 1));
  EXPECT_EQ(basis_monomials(*algebra_G(), 4).size(), total);
}

TEST(NCAlg, ConfluenceProbe) {
  for (const char* name : {"G", "G_b", "G_d", "G_bd", "Manin"}) {
    const ConfluenceReport r = confluence_probe(algebra_by_name(name), 60, 5, 11);
    EXPECT_TRUE(r.ok()) << name << (r.witnesses.empty() ? "" : ": " + r.witnesses.front());
  }
}

TEST(NCAlg, ParseErrors) {
  EXPECT_THROW(parse_poly(algebra_G(), "a +"), ParseError);
  EXPECT_THROW(parse_poly(algebra_G(), "e"), ParseError);
}
