#include <gtest/gtest.h>

#include "suq2/bundle.hpp"

using namespace suq2;

TEST(Bundle, SliceAndSectionDimensions) {
  for (int n = 0; n <= 3; ++n)
    for (int d = n + 1; d <= n + 3; ++d) {
      EXPECT_EQ(cotensor_slice(n, d).basis.size(), static_cast<std::size_t>(n + 1)) << n << " " << d;
      EXPECT_EQ(sections_space(n, d).size(), static_cast<std::size_t>(n + 1)) << n << " " << d;
    }
}

TEST(Bundle, SliceForNOne) {
  const CotensorSlice s = cotensor_slice(1, 3);
  ASSERT_EQ(s.basis.size(), 2u);
  std::vector<std::string> names;
  for (const auto& p : s.basis) names.push_back(p.to_string());
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"b", "d"}));
}

TEST(Bundle, GlueOfSliceElementsGlues) {
  for (int n = 0; n <= 3; ++n)
    for (const auto& g : cotensor_slice(n, n + 1).basis) EXPECT_TRUE(glues(glue(g, n), n)) << g;
}

TEST(Bundle, KappaRoundTrip) {
  const LeftComodule v = vn_left_borel(2);
  for (ChartId id : {ChartId::B, ChartId::D}) {
    const PresentationPtr& A = chart(id).algebra;
    const ChartVector F = {parse_poly(A, "a + c"), parse_poly(A, "b"), parse_poly(A, "d^2 - 1")};
    EXPECT_EQ(kappa(id, v, kappa_bar(id, v, F)), F);
    EXPECT_EQ(kappa_bar(id, v, kappa(id, v, F)), F);
  }
}

TEST(Bundle, IntertwinerIsInvertible) {
  for (int n = 0; n <= 3; ++n) {
    const Intertwiner phi = slice_intertwiner(cotensor_slice(n, n + 1));
    EXPECT_TRUE(phi.found && phi.invertible) << n;
    EXPECT_EQ(phi.solution_dim, 1u) << n;
  }
}

TEST(Bundle, GlueIsomorphism) {
  for (int n = 0; n <= 2; ++n) {
    const Report r = glue_iso_check(n, n + 2);
    EXPECT_TRUE(r.all_pass()) << r.to_text();
  }
}
