#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "suq2/charts.hpp"
#include "suq2/coherent.hpp"
#include "suq2/errata.hpp"
#include "suq2/haar.hpp"
#include "suq2/hopf.hpp"
#include "suq2/suites.hpp"

using namespace suq2;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kParse = 2, kDomain = 3 };

std::pair<int, int> parse_range(const std::string& s) {
  const auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      const int n = std::stoi(s);
      return {n, n};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
  } catch (const std::exception&) {
    throw ParseError("bad range: " + s);
  }
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return r.to_json();
  if (format == "tsv") return r.to_tsv();
  return r.to_text();
}

int cmd_eval(const std::string& expr, const std::string& algebra, const std::string& action) {
  const PresentationPtr A = algebra_by_name(algebra);
  const NCPoly p = parse_poly(A, expr);
  if (action == "nf") std::cout << p << "\n";
  else if (action == "coproduct") std::cout << coproduct(p) << "\n";
  else if (action == "counit") std::cout << counit(p) << "\n";
  else if (action == "antipode") std::cout << antipode(p) << "\n";
  else if (action == "star") std::cout << star(p) << "\n";
  else if (action == "haar") std::cout << haar(p) << "\n";
  else throw ParseError("unknown action: " + action);
  return kPass;
}

int cmd_haar(const std::string& expr, const std::string& q) {
  const QScalar v = haar(parse_poly(algebra_G(), expr));
  std::cout << v << "\n";
  if (!q.empty()) std::cout << "at q=" << q << ": " << rational_to_string(specialize(v, parse_rational(q))) << "\n";
  return kPass;
}

int cmd_resolution(int n, const std::string& q, const std::string& format) {
  const QRational q0 = parse_rational(q);
  const ResolutionResult& r = resolution_operator(n);
  const Report lemmas = resolution_suite(n, n, q0);
  ojson lemma_checks = ojson::array();
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const QScalar v = lemma_integral(i, j, n);
      const QScalar expected = i == j ? lemma_closed_form(i, n) : QScalar(0);
      lemma_checks.push_back({{"i", i}, {"j", j}, {"value", v.to_string()}, {"expected", expected.to_string()},
                              {"status", v == expected ? "pass" : "fail"}});
    }
  ojson qbeta_checks = ojson::array();
  for (int i = 0; i <= n; ++i) {
    const QScalar v = qbeta_integral(i, n);
    qbeta_checks.push_back({{"i", i},
                            {"value", v.to_string()},
                            {"closed_form", qbeta_stated(i, n).to_string()},
                            {"status", v == qbeta_stated(i, n) ? "pass" : "fail"},
                            {"inverse_binomial_form", qbeta_inverse_binomial(i, n).to_string()},
                            {"inverse_binomial_status", v == qbeta_inverse_binomial(i, n) ? "pass" : "fail"}});
  }
  const std::string alpha_at_q = rational_to_string(specialize(r.alpha, q0));
  if (format == "json") {
    ojson out = {{"schema_version", 1},
                 {"n", n},
                 {"alpha_exact", r.alpha.to_string()},
                 {"alpha_at_q", alpha_at_q},
                 {"q", rational_to_string(q0)},
                 {"matrix_is_scalar", r.scalar},
                 {"chart_agreement", r.chart_agreement},
                 {"lemma_checks", lemma_checks},
                 {"qbeta_checks", qbeta_checks}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "tsv") {
    std::cout << "n\t" << n << "\nalpha_exact\t" << r.alpha << "\nalpha_at_q\t" << alpha_at_q << "\nmatrix_is_scalar\t"
              << r.scalar << "\nchart_agreement\t" << r.chart_agreement << "\n";
    for (const auto& c : qbeta_checks) std::cout << "qbeta i=" << c["i"] << "\t" << c["status"].get<std::string>() << "\n";
  } else {
    std::cout << "n = " << n << "\nalpha = " << r.alpha << " = " << alpha_at_q << " at q=" << rational_to_string(q0)
              << "\nmatrix is scalar: " << (r.scalar ? "yes" : "no")
              << "\nchart agreement: " << (r.chart_agreement ? "yes" : "no") << "\n"
              << lemmas.to_text();
  }
  return lemmas.all_pass() && r.scalar && r.chart_agreement ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of line bundles and coherent states on the quantum group SU_q(2)"};
  app.require_subcommand(1);

  std::string expr, algebra = "G", action = "nf";
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("expr", expr)->required();
  eval->add_option("--algebra", algebra, "G, G_b, G_d, G_bd, Borel, Manin");
  eval->add_option("--action", action, "nf, coproduct, counit, antipode, star, haar");

  std::string suite, range = "0..3", q = "1/2", format = "text";
  SuiteOptions opt;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", range, "n range A..B");
  verify->add_option("--degree", opt.degree);
  verify->add_option("--q", q, "evaluation point p/r");
  verify->add_option("--seed", opt.seed);
  verify->add_option("--samples", opt.samples);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "tsv", "text"}));
  verify->add_flag("--timing", timing, "include runtime_ms");
  verify->add_flag("--corrupt", opt.corrupt)->group("");

  std::string haar_expr, haar_q;
  auto* haar_cmd = app.add_subcommand("haar", "Haar integral of an element of G");
  haar_cmd->add_option("expr", haar_expr)->required();
  haar_cmd->add_option("--q", haar_q);

  int res_n = 1;
  std::string res_q = "1/2", res_format = "text";
  auto* res = app.add_subcommand("resolution", "Resolution of unity for V_n");
  res->add_option("--n", res_n)->required();
  res->add_option("--q", res_q);
  res->add_option("--format", res_format)->check(CLI::IsMember({"json", "tsv", "text"}));

  std::string what;
  auto* chart_cmd = app.add_subcommand("chart", "Chart data");
  chart_cmd->add_option("what", what)->required()->check(CLI::IsMember({"dump"}));

  std::string errata_format = "json";
  auto* errata_cmd = app.add_subcommand("errata", "Printed formulas against computed values");
  errata_cmd->add_option("--format", errata_format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kParse;
  }

  try {
    if (*eval) return cmd_eval(expr, algebra, action);
    if (*verify) {
      std::tie(opt.nmin, opt.nmax) = parse_range(range);
      opt.q0 = parse_rational(q);
      const auto t0 = std::chrono::steady_clock::now();
      Report r = run_suite(suite, opt);
      if (timing)
        r.set_runtime_ms(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                             .count());
      std::cout << render(r, format);
      if (format == "json") std::cout << "\n";
      return r.all_pass() ? kPass : kFail;
    }
    if (*haar_cmd) return cmd_haar(haar_expr, haar_q);
    if (*res) return cmd_resolution(res_n, res_q, res_format);
    if (*chart_cmd) {
      std::cout << chart_dump();
      return kPass;
    }
    if (*errata_cmd) {
      bool ok = true;
      if (errata_format == "json") {
        std::cout << errata_json() << "\n";
        for (const auto& e : errata()) ok = ok && e.resolved();
      } else {
        const Report r = verify_errata();
        std::cout << r.to_text();
        ok = r.all_pass();
      }
      return ok ? kPass : kFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  }
  return kPass;
}
