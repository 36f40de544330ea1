#include <gtest/gtest.h>

#include "json.hpp"
#include "suq2/suites.hpp"

using namespace suq2;

TEST(Report, JsonIsSortedAndVersioned) {
  Report r("demo", 5);
  r.add("z check", true, "anchor z");
  r.add("a check", false, "anchor a", "witness");
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["seed"], 5);
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][0]["name"], "a check");
  EXPECT_EQ(j["checks"][0]["status"], "fail");
  EXPECT_FALSE(j.contains("runtime_ms"));
  r.set_runtime_ms(3);
  EXPECT_EQ(nlohmann::json::parse(r.to_json())["runtime_ms"], 3);
}

TEST(Report, SuitesAreDeterministic) {
  SuiteOptions opt;
  opt.nmax = 1;
  opt.degree = 3;
  opt.samples = 5;
  EXPECT_EQ(run_suite("hopf", opt).to_json(), run_suite("hopf", opt).to_json());
  EXPECT_THROW(run_suite("nope", opt), std::invalid_argument);
}
