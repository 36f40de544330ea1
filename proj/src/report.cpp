#include "suq2/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace suq2 {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "fail";
}

void Report::add(std::string name, bool ok, std::string anchor, std::string witness) {
  checks_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness), std::move(anchor)});
}

void Report::add_status(std::string name, Status status, std::string anchor, std::string witness) {
  checks_.push_back({std::move(name), status, std::move(witness), std::move(anchor)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.status, c.witness, c.anchor});
}

bool Report::all_pass() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Fail; });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail) return &c;
  return nullptr;
}

std::vector<Check> Report::sorted() const {
  std::vector<Check> v = checks_;
  std::stable_sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return v;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["suite"] = suite_;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : sorted()) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["status"] = status_name(c.status);
    if (!c.witness.empty()) o["witness"] = c.witness;
    o["paper_anchor"] = c.anchor;
    arr.push_back(std::move(o));
  }
  j["checks"] = std::move(arr);
  j["seed"] = seed_;
  if (runtime_ms_) j["runtime_ms"] = *runtime_ms_;
  return j.dump(2);
}

std::string Report::to_tsv() const {
  std::ostringstream os;
  os << "name\tstatus\twitness\tanchor\n";
  for (const auto& c : sorted()) os << c.name << '\t' << status_name(c.status) << '\t' << c.witness << '\t' << c.anchor << '\n';
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "suite " << suite_ << " (seed " << seed_ << ")\n";
  for (const auto& c : sorted()) {
    os << "  [" << status_name(c.status) << "] " << c.name;
    if (!c.witness.empty()) os << "  -- " << c.witness;
    os << '\n';
  }
  os << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, " << count(Status::Skipped)
     << " skipped\n";
  if (runtime_ms_) os << "runtime " << *runtime_ms_ << " ms\n";
  return os.str();
}

}  // namespace suq2
