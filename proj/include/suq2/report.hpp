#pragma once

/// Verification reports shared by every suite.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace suq2 {

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;
  std::string anchor;
};

class Report {
 public:
  Report() = default;
  Report(std::string suite, std::uint64_t seed) : suite_(std::move(suite)), seed_(seed) {}

  void add(std::string name, bool ok, std::string anchor, std::string witness = {});
  void add_status(std::string name, Status status, std::string anchor, std::string witness = {});
  /// Appends another report's checks with the given name prefix.
  void merge(const Report& other, const std::string& prefix);

  [[nodiscard]] const std::string& suite() const { return suite_; }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] std::size_t count(Status s) const;
  [[nodiscard]] const Check* find(const std::string& name) const;
  /// First failing check, if any.
  [[nodiscard]] const Check* first_failure() const;

  void set_runtime_ms(long ms) { runtime_ms_ = ms; }

  /// Checks sorted by name; runtime_ms only when set.
  [[nodiscard]] std::string to_json() const;
  [[nodiscard]] std::string to_tsv() const;
  [[nodiscard]] std::string to_text() const;

 private:
  [[nodiscard]] std::vector<Check> sorted() const;
  std::string suite_;
  std::uint64_t seed_ = 0;
  std::vector<Check> checks_;
  std::optional<long> runtime_ms_;
};

}  // namespace suq2
