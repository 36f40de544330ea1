#include "suq2/suites.hpp"

#include <stdexcept>

#include "suq2/bundle.hpp"
#include "suq2/charts.hpp"
#include "suq2/coherent.hpp"
#include "suq2/comod.hpp"
#include "suq2/errata.hpp"
#include "suq2/haar.hpp"
#include "suq2/hopf.hpp"
#include "suq2/rewrite.hpp"

namespace suq2 {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rewrite", "hopf",     "charts",     "cover",  "gram", "bundle",
                                                 "haar",    "coherent", "resolution", "errata", "all"};
  return names;
}

Report rewrite_suite(std::size_t samples, int degree, std::uint64_t seed) {
  Report rep("rewrite", seed);
  for (const char* name : {"G", "G_b", "G_d", "G_bd", "Manin"}) {
    const ConfluenceReport c = confluence_probe(algebra_by_name(name), samples, degree, seed);
    const std::string w = c.witnesses.empty() ? "" : c.witnesses.front();
    const std::string sfx = std::string(" on ") + name;
    rep.add("randomized rewriting agrees" + sfx, c.discrepancies == 0, "relations are confluent on the PBW basis", w);
    rep.add("rewriting agrees with the engine" + sfx, c.engine_mismatches == 0, "relations are confluent on the PBW basis",
            w);
    rep.add("outputs lie in the canonical basis" + sfx, c.basis_violations == 0, "basis a^i b^j c^k, b^j c^k d^l", w);
  }
  return rep;
}

Report resolution_suite(int nmin, int nmax, const QRational& q0) {
  Report rep("resolution", 0);
  const std::string anchor = "resolution of unity: h(|C> dmu <C|) = alpha id";
  for (int n = nmin; n <= nmax; ++n) {
    const std::string sfx = " n=" + std::to_string(n);
    const ResolutionResult& r = resolution_operator(n);
    rep.add("matrix is scalar" + sfx, r.scalar, anchor, r.offending);
    rep.add("charts agree" + sfx, r.chart_agreement, anchor);
    rep.add("alpha = q^n/[n+1]_q" + sfx, r.alpha == QScalar::q_pow(n) / q_number(n + 1), anchor,
            r.alpha.to_string() + " = " + rational_to_string(specialize(r.alpha, q0)) + " at q=" + rational_to_string(q0));
    std::string bad;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const QScalar v = lemma_integral(i, j, n);
        if (i == j ? !(v == lemma_closed_form(i, n)) : !v.is_zero())
          bad = "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + v.to_string();
      }
    rep.add("lemma integrals" + sfx, bad.empty(), "integral of u^i d^n (u^j d^n)*", bad);
    for (int i = 0; i <= n; ++i) rep.merge(qbeta_check(i, n), "");
  }
  return rep;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "rewrite") return rewrite_suite(200, std::max(opt.degree, 1), opt.seed);
  if (name == "hopf") {
    Report rep("hopf", opt.seed);
    if (opt.corrupt) {
      rep.merge(verify_hopf(corrupted_hopf_G(), opt.degree, opt.samples, opt.seed), "corrupted G: ");
      return rep;
    }
    rep.merge(verify_hopf(hopf_G(), opt.degree, opt.samples, opt.seed), "G: ");
    rep.merge(verify_hopf(hopf_borel(), opt.degree, opt.samples, opt.seed), "Borel: ");
    rep.merge(verify_projection(opt.degree), "");
    const AntipodeSolution s = solve_antipode_G();
    rep.add("antipode is the unique solution of the antipode law", s.unique, "antipode of the quantum group");
    return rep;
  }
  if (name == "charts") return verify_charts(opt.degree, opt.samples, opt.seed);
  if (name == "cover") {
    Report rep("cover", opt.seed);
    for (int d = 1; d <= opt.degree; ++d) {
      const EqualizerResult e = cover_equalizer(d);
      rep.add("cover equalizer degree " + std::to_string(d), e.ok(), "the b and d localizations cover G", e.witness);
    }
    return rep;
  }
  if (name == "gram") return verify_comod(opt.nmax);
  if (name == "bundle") return verify_bundle(opt.nmax, opt.degree, opt.samples, opt.seed);
  if (name == "haar") return verify_haar(opt.degree, opt.samples, opt.q0, opt.seed);
  if (name == "coherent") {
    Report rep("coherent", opt.seed);
    rep.merge(verify_coherent(opt.nmin, opt.nmax, opt.samples, opt.seed), "");
    rep.merge(verify_scalar_operator(std::min(opt.nmax, 3), opt.samples, opt.seed), "scalar operator: ");
    return rep;
  }
  if (name == "resolution") return resolution_suite(opt.nmin, opt.nmax, opt.q0);
  if (name == "errata") return verify_errata();
  if (name == "all") {
    Report rep("all", opt.seed);
    for (const auto& s : suite_names())
      if (s != "all") rep.merge(run_suite(s, opt), s + ": ");
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace suq2
