#pragma once

/// Discrepancies between printed formulas and the values the engine computes.

#include <string>
#include <vector>

#include "suq2/report.hpp"

namespace suq2 {

struct Erratum {
  std::string id;
  std::string printed;
  std::string computed;
  bool printed_refuted = false;
  bool computed_confirmed = false;
  [[nodiscard]] bool resolved() const { return printed_refuted && computed_confirmed; }
  [[nodiscard]] std::string status() const { return resolved() ? "resolved" : "open"; }
};

/// Ids of the entries that must always be present.
const std::vector<std::string>& required_errata();

std::vector<Erratum> errata();
std::string errata_json();
Report verify_errata();

}  // namespace suq2
