// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "suq2/bundle.hpp"
#include "suq2/charts.hpp"
#include "suq2/coherent.hpp"
#include "suq2/errata.hpp"
#include "suq2/haar.hpp"
#include "suq2/hopf.hpp"
#include "suq2/suites.hpp"

using namespace suq2;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  Report report;
  bool extra_ok = true;
  std::string extra_note;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  const Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0 || secs < budget_s;
  const bool ok = o.report.all_pass() && o.extra_ok && in_time;
  if (!ok) ++failures;
  std::printf("criterion %d %s: %s (%zu pass, %zu fail, %zu skipped, %.2fs", id, title.c_str(), ok ? "PASS" : "FAIL",
              o.report.count(Status::Pass), o.report.count(Status::Fail), o.report.count(Status::Skipped), secs);
  if (budget_s > 0) std::printf(" of %.0fs", budget_s);
  std::printf(")");
  if (const Check* f = o.report.first_failure())
    std::printf(" first failure: %s%s%s", f->name.c_str(), f->witness.empty() ? "" : " -- ", f->witness.c_str());
  if (!o.extra_note.empty()) std::printf(" %s", o.extra_note.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "rewriting soundness", 10, [] {
    Outcome o{Report("rewrite", kSeed)};
    o.report.merge(rewrite_suite(200, 6, kSeed), "");
    return o;
  });

  criterion(2, "hopf suite", 10, [] {
    Outcome o{Report("hopf", kSeed)};
    o.report.merge(verify_hopf(hopf_G(), 5, 100, kSeed), "G: ");
    o.report.merge(verify_hopf(hopf_borel(), 5, 100, kSeed), "Borel: ");
    o.report.merge(verify_projection(5), "");
    return o;
  });

  criterion(3, "haar suite", 20, [] {
    Outcome o{Report("haar", kSeed)};
    o.report.merge(verify_haar(5, 50, QRational(1, 2), kSeed), "");
    return o;
  });

  criterion(4, "charts suite", 30, [] {
    Outcome o{Report("charts", kSeed)};
    o.report.merge(verify_charts(6, 30, kSeed), "");
    return o;
  });

  criterion(5, "bundle suite", 60, [] {
    Outcome o{Report("bundle", kSeed)};
    o.report.merge(verify_bundle(4, 7, 50, kSeed), "");
    return o;
  });

  criterion(6, "coherent suite", 60, [] {
    Outcome o{Report("coherent", kSeed)};
    o.report.merge(verify_coherent(0, 4, 20, kSeed), "");
    const bool anchor = specialize(resolution_operator(1).alpha, QRational(1, 2)) == QRational(1, 5) &&
                        haar(parse_poly(algebra_G(), "d a")) == parse_scalar("q^2/(q^2 + 1)");
    o.report.add("alpha = 1/5 at q = 1/2 for n = 1", anchor, "h(d d*) = q^2/(q^2 + 1)");
    return o;
  });

  criterion(7, "scalar operator for every w", 0, [] {
    Outcome o{Report("scalar_operator", kSeed)};
    o.report.merge(verify_scalar_operator(3, 20, kSeed), "");
    return o;
  });

  criterion(8, "discrepancy ledger", 0, [] {
    Outcome o{Report("errata", kSeed)};
    o.report.merge(verify_errata(), "");
    return o;
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
