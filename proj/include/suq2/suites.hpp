#pragma once

/// Named verification suites shared by the CLI and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include "suq2/report.hpp"
#include "suq2/scalar.hpp"

namespace suq2 {

struct SuiteOptions {
  int nmin = 0;
  int nmax = 3;
  int degree = 5;
  QRational q0{1, 2};
  std::uint64_t seed = 1;
  int samples = 20;
  bool corrupt = false;  // run the hopf suite on a broken coproduct
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opt);

Report rewrite_suite(std::size_t samples, int degree, std::uint64_t seed);
Report resolution_suite(int nmin, int nmax, const QRational& q0);

}  // namespace suq2
