#include "suq2/coherent.hpp"

#include <map>
#include <mutex>
#include <random>

#include "suq2/bundle.hpp"
#include "suq2/haar.hpp"
#include "suq2/hopf.hpp"
#include "suq2/linalg.hpp"

namespace suq2 {

namespace {

const std::string kAnchorFamily = "coherent family: rho(v_chi) = C gamma(chi)";
const std::string kAnchorResolution = "resolution of unity: h(|C> dmu <C|) = alpha id, independent of the chart";
const std::string kAnchorLemma = "integral of u^i d^n (u^j d^n)*";
const std::string kAnchorQbeta = "q-beta integral h(zeta^i (q^-2 zeta; q^-2)_(n-i))";
const std::string kAnchorScalarOperator = "A|v> = sum <w_0|v> w_0' h(w_1* w_1') is scalar";

long choose2(long i) { return i * (i - 1) / 2; }

long classical_binomial(long n, long k) {
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

QScalar binom_qm2(int n, int i) { return gauss_binomial(n, i, QScalar::q_pow(-2)); }

NCPoly chi_of(int n) { return NCPoly::gen(algebra_borel(), kLambda, -n); }

std::string vec_to_string(const std::vector<QScalar>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

// P_i = C_i gamma(chi), read in G.
std::vector<NCPoly> family_in_G(const CoherentFamily& f) {
  const NCPoly g = gamma_of(f.chart, chi_of(f.n));
  std::vector<NCPoly> out;
  for (const auto& c : f.coeffs) out.push_back(lift_to_G(c * g));
  return out;
}

ResolutionResult compute_resolution(int n) {
  ResolutionResult r;
  r.n = n;
  const CoherentFamily cb = solve_coherent(ChartId::B, n);
  const CoherentFamily cd = solve_coherent(ChartId::D, n);
  const std::vector<NCPoly> pb = family_in_G(cb);
  const std::vector<NCPoly> pd = family_in_G(cd);
  const auto N = static_cast<std::size_t>(n + 1);
  r.chart_agreement = true;
  std::vector<std::vector<NCPoly>> kernel(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const NCPoly xb = pb[i] * star(pb[j]);
      const NCPoly xd = pd[i] * star(pd[j]);
      if (!(xb == xd)) r.chart_agreement = false;
      kernel[i].push_back(xd);
    }
  const GramForm& g = gram(n);
  r.integrals.assign(N, std::vector<QScalar>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r.integrals[i][j] = haar(kernel[i][j]);
  r.matrix = matmul(r.integrals, g.gram);
  const SchurResult s = schur_scalar(r.matrix);
  r.scalar = s.scalar;
  r.alpha = s.alpha;
  r.offending = s.offending;
  return r;
}

NCPoly u_power_d(int i, int n) {
  const PresentationPtr& Gd = algebra_G_d();
  return lift_to_G(chart(ChartId::D).coinvariant_generator.pow(i) * NCPoly::gen(Gd, kD, n));
}

}  // namespace

NCPoly lift_to_G(const NCPoly& p) {
  NCPoly out(algebra_G());
  for (const auto& [e, c] : p.terms()) {
    for (int x : e)
      if (x < 0) throw DomainError("not an element of G: " + p.to_string());
    out += NCPoly(algebra_G(), TermMap{{e, c}});
  }
  return out;
}

CoherentFamily solve_coherent(ChartId id, int n) {
  const Chart& ch = chart(id);
  const PresentationPtr T = tensor_of({algebra_manin(), ch.algebra});
  const AlgebraMap idM = identity_map(algebra_manin());
  const AlgebraMap loc = tensor_map({&idM, &ch.iota});
  const NCPoly rho = loc.apply(coaction(NCPoly::gen(algebra_manin(), kY, n)));
  const NCPoly ginv = gamma_of(id, NCPoly::gen(algebra_borel(), kLambda, n));
  CoherentFamily f;
  f.chart = id;
  f.n = n;
  f.element = rho * embed(ginv, T, 1);
  f.coeffs.assign(static_cast<std::size_t>(n + 1), NCPoly(ch.algebra));
  for (const auto& [e, c] : f.element.terms()) {
    const Exponents m = factor_part(*T, e, 0);
    f.coeffs.at(static_cast<std::size_t>(m[kX])) += c * NCPoly(ch.algebra, TermMap{{factor_part(*T, e, 1), QScalar(1)}});
  }
  f.factorizes = f.element * embed(gamma_of(id, chi_of(n)), T, 1) == rho;
  std::vector<NCPoly> powers;
  for (int k = 0; k <= n; ++k) powers.push_back(ch.coinvariant_generator.pow(k));
  f.coinvariant = true;
  for (const auto& c : f.coeffs) f.coinvariant = f.coinvariant && express_in_span(c, powers).has_value();
  return f;
}

QScalar coherent_coefficient(int n, int i) { return binom_qm2(n, i) * QScalar::q_pow(-choose2(i)); }

Report section_property_check(int n) {
  Report rep("coherent:sections n=" + std::to_string(n), 0);
  const CoherentFamily cb = solve_coherent(ChartId::B, n);
  const CoherentFamily cd = solve_coherent(ChartId::D, n);
  const GramForm& g = gram(n);
  std::string bad;
  for (int k = 0; k <= n; ++k) {
    const NCPoly v = vn(n).element(k);
    const Section s{pairing(cb.element, v, g), pairing(cd.element, v, g)};
    if (!glues(s, n)) bad = v.to_string();
  }
  rep.add("<C|v> is a section n=" + std::to_string(n), bad.empty(), "pairing a coherent family with v gives a section",
          bad);
  return rep;
}

NCPoly mu_density(ChartId id, int n) {
  const NCPoly g = lift_to_G(gamma_of(id, chi_of(n)));
  return g * star(g);
}

const ResolutionResult& resolution_operator(int n) {
  static std::mutex mu;
  static std::map<int, ResolutionResult> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_resolution(n)).first;
  return it->second;
}

QScalar lemma_integral(int i, int j, int n) { return haar(u_power_d(i, n) * star(u_power_d(j, n))); }

QScalar lemma_closed_form(int i, int n) {
  return QScalar::q_pow(n) * QScalar::q_pow(2 * choose2(i)) / (binom_qm2(n, i) * q_number(n + 1));
}

QScalar qbeta_integral(int i, int n) {
  const QScalar p = QScalar::q_pow(-2);
  const ScalarPoly f = ScalarPoly::monomial(QScalar(1), static_cast<std::size_t>(i)) * q_pochhammer(p, p, n - i);
  return haar(zeta_polynomial(f));
}

QScalar qbeta_stated(int i, int n) { return binom_qm2(n, i) * QScalar::q_pow(n) / q_number(n + 1); }

QScalar qbeta_inverse_binomial(int i, int n) { return QScalar::q_pow(n) / (binom_qm2(n, i) * q_number(n + 1)); }

Report qbeta_check(int i, int n) {
  Report rep("coherent:qbeta", 0);
  const std::string sfx = " i=" + std::to_string(i) + " n=" + std::to_string(n);
  const QScalar lhs = qbeta_integral(i, n);
  const QScalar stated = qbeta_stated(i, n);
  rep.add("qbeta closed form binom q^n/[n+1]" + sfx, lhs == stated, kAnchorQbeta,
          lhs == stated ? "" : "integral " + lhs.to_string() + " vs " + stated.to_string());
  rep.add("qbeta with inverse binomial binom^-1 q^n/[n+1]" + sfx, lhs == qbeta_inverse_binomial(i, n), kAnchorQbeta,
          lhs.to_string());
  return rep;
}

Report ramanujan_qbeta(int alpha, int beta) {
  Report rep("coherent:ramanujan", 0);
  const std::string sfx = " alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta);
  const QScalar p = QScalar::q_pow(-2);
  const ScalarPoly pochh = q_pochhammer(p, p, beta - 1);
  const ScalarPoly f = ScalarPoly::monomial(QScalar(1), static_cast<std::size_t>(alpha - 1)) * pochh;
  const QScalar lhs = jackson_integral_01(f, p);
  const QScalar rhs = q_gamma_int(alpha, p) * q_gamma_int(beta, p) / q_gamma_int(alpha + beta, p);
  const std::string anchor = "Ramanujan q-beta integral: Gamma_p(alpha) Gamma_p(beta) / Gamma_p(alpha + beta)";
  rep.add("jackson integral x^(alpha-1) (px;p)_(beta-1) equals the Gamma ratio" + sfx, lhs == rhs, anchor,
          lhs == rhs ? "" : lhs.to_string() + " vs " + rhs.to_string());
  rep.add("Haar integral of the zeta polynomial equals the jackson integral" + sfx, haar(zeta_polynomial(f)) == lhs,
          anchor);
  const QScalar shifted = jackson_integral_01(ScalarPoly::monomial(QScalar(1), static_cast<std::size_t>(alpha)) * pochh, p);
  rep.add("integrand x^alpha misses the Gamma ratio" + sfx, !(shifted == rhs), anchor, shifted.to_string());
  return rep;
}

ScalarMatrix integrand_operator(int n, const std::vector<QScalar>& w, IntegrandOrder order) {
  const VnComodule& V = vn(n);
  const GramForm& g = gram(n);
  const std::size_t N = V.dim();
  std::vector<NCPoly> W(N, NCPoly(algebra_G()));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!w[j].is_zero()) W[i] += w[j] * V.matrix[i][j];
  std::vector<NCPoly> Ws;
  for (const auto& x : W) Ws.push_back(star(x));
  // A e_l = sum_{i,m} <e_i|e_l> e_m h(...)
  ScalarMatrix A(N, std::vector<QScalar>(N));
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t i = 0; i < N; ++i) {
      const QScalar h = haar(order == IntegrandOrder::Printed ? Ws[i] * W[m] : W[m] * Ws[i]);
      if (h.is_zero()) continue;
      for (std::size_t l = 0; l < N; ++l) A[m][l] += g.gram[i][l] * h;
    }
  return A;
}

SchurResult scalar_operator_general(int n, const std::vector<QScalar>& w, IntegrandOrder order) {
  return schur_scalar(integrand_operator(n, w, order));
}

std::vector<QScalar> reproducing_apply(int n, const ScalarMatrix& H, const std::vector<QScalar>& v) {
  const ResolutionResult& r = resolution_operator(n);
  const GramForm& g = gram(n);
  // sum_{i,j} H e_i h(P_i P_j*) <e_j|v>
  const std::vector<QScalar> pairings = matvec(g.gram, v);
  const std::vector<QScalar> weights = matvec(r.integrals, pairings);
  std::vector<QScalar> out = matvec(H, weights);
  for (auto& x : out) x = x / r.alpha;
  return out;
}

Report verify_coherent(int nmin, int nmax, int samples, std::uint64_t seed) {
  Report rep("coherent", seed);
  const QRational one(1);
  for (int n = nmin; n <= nmax; ++n) {
    const std::string sfx = " n=" + std::to_string(n);
    bool ok = true;
    std::string bad;
    for (ChartId id : {ChartId::B, ChartId::D}) {
      const CoherentFamily f = solve_coherent(id, n);
      if (!f.factorizes || !f.coinvariant) {
        ok = false;
        bad = chart_name(id);
      }
    }
    rep.add("coherent family exists in both charts" + sfx, ok, kAnchorFamily, bad);
    {
      const CoherentFamily f = solve_coherent(ChartId::D, n);
      const NCPoly u = chart(ChartId::D).coinvariant_generator;
      bad.clear();
      for (int i = 0; i <= n; ++i)
        if (!(f.coeffs[static_cast<std::size_t>(i)] == coherent_coefficient(n, i) * u.pow(i)))
          bad = "i=" + std::to_string(i) + ": " + f.coeffs[static_cast<std::size_t>(i)].to_string();
      rep.add("d-chart coefficients binom(n,i)_{q^-2} q^-C(i,2) u^i" + sfx, bad.empty(), kAnchorFamily, bad);
      bad.clear();
      for (int i = 0; i <= n; ++i)
        if (specialize(coherent_coefficient(n, i), one) != QRational(classical_binomial(n, i)))
          bad = "i=" + std::to_string(i);
      rep.add("classical limit of coefficients is binom(n,i)" + sfx, bad.empty(), kAnchorFamily, bad);
    }
    rep.merge(section_property_check(n), "");
    {
      const NCPoly expect = n == 0 ? NCPoly::scalar(algebra_G(), QScalar(1)) : mu_density(ChartId::D, n);
      rep.add("dmu_d(chi) = d^n a^n" + sfx, expect == parse_poly(algebra_G(), "d^" + std::to_string(n) + " a^" +
                                                                                std::to_string(n)),
              "dmu(chi) = gamma(chi) gamma(chi)*");
    }
    const ResolutionResult& r = resolution_operator(n);
    rep.add("charts give the same |C> dmu <C|" + sfx, r.chart_agreement, kAnchorResolution);
    rep.add("resolution operator is scalar" + sfx, r.scalar, kAnchorResolution, r.offending);
    const QScalar expected = QScalar::q_pow(n) / q_number(n + 1);
    rep.add("alpha = q^n/[n+1]_q" + sfx, r.scalar && r.alpha == expected, kAnchorResolution, r.alpha.to_string());
    rep.add("alpha [n+1]_q q^-n = 1" + sfx, r.scalar && (r.alpha * q_number(n + 1) * QScalar::q_pow(-n)).is_one(),
            kAnchorResolution);
    rep.add("alpha = q^-n/[n+1]_q fails" + sfx, n == 0 || !(r.alpha == QScalar::q_pow(-n) / q_number(n + 1)),
            kAnchorResolution);
    rep.add("classical limit alpha -> 1/(n+1)" + sfx, specialize(r.alpha, one) == QRational(1, n + 1),
            kAnchorResolution);
    bad.clear();
    std::string bad_ratio;
    QScalar ratio0;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const QScalar v = lemma_integral(i, j, n);
        if (i != j && !v.is_zero()) bad = "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + v.to_string();
        if (i == j) {
          if (!(v == lemma_closed_form(i, n))) bad = "(" + std::to_string(i) + "," + std::to_string(i) + ") = " + v.to_string();
          const QScalar ratio = v * binom_qm2(n, i) * QScalar::q_pow(-2 * choose2(i));
          if (i == 0) ratio0 = ratio;
          else if (!(ratio == ratio0)) bad_ratio = "i=" + std::to_string(i);
        }
      }
    rep.add("lemma integrals match the closed form" + sfx, bad.empty(), kAnchorLemma, bad);
    rep.add("lemma integral binom q^-2C(i,2) independent of i" + sfx, bad_ratio.empty(), kAnchorLemma, bad_ratio);
  }
  for (int n = 0; n <= 5; ++n)
    for (int i = 0; i <= n; ++i) rep.merge(qbeta_check(i, n), "");
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) rep.merge(ramanujan_qbeta(a, b), "");
  {
    std::string bad;
    for (int r = 0; r <= 5; ++r) {
      const NCPoly lhs = parse_poly(algebra_G(), "d^" + std::to_string(r) + " a^" + std::to_string(r));
      NCPoly prod = NCPoly::scalar(algebra_G(), QScalar(1));
      for (int k = 0; k < r; ++k)
        prod = prod * (NCPoly::scalar(algebra_G(), QScalar(1)) +
                       QScalar::q_pow(-1 - 2 * k) * parse_poly(algebra_G(), "b c"));
      const QScalar p = QScalar::q_pow(-2);
      if (!(lhs == prod) || !(lhs == zeta_polynomial(q_pochhammer(p, p, r)))) bad = "r=" + std::to_string(r);
    }
    rep.add("d^r a^r = prod (1 + q^(-1-2k) b c) = (q^-2 zeta; q^-2)_r", bad.empty(), "factorization of d^r a^r", bad);
  }
  {
    std::mt19937_64 rng(seed);
    std::string bad;
    for (int s = 0; s < samples && bad.empty(); ++s) {
      const int n = static_cast<int>(rng() % 4);
      const auto N = static_cast<std::size_t>(n + 1);
      ScalarMatrix H(N, std::vector<QScalar>(N));
      std::vector<QScalar> v(N);
      for (auto& row : H)
        for (auto& x : row) x = QScalar(static_cast<long>(rng() % 9) - 4);
      for (auto& x : v) x = QScalar(static_cast<long>(rng() % 9) - 4);
      if (!(reproducing_apply(n, H, v) == matvec(H, v))) bad = "n=" + std::to_string(n) + " v=" + vec_to_string(v);
    }
    rep.add("reproducing formula returns H v", bad.empty(), "reproducing kernel: H|v> = alpha^-1 h(H|C> dmu <C|v>)",
            bad);
  }
  return rep;
}

Report verify_scalar_operator(int nmax, int samples, std::uint64_t seed) {
  Report rep("scalar_operator", seed);
  std::mt19937_64 rng(seed);
  for (int n = 0; n <= nmax; ++n) {
    const auto N = static_cast<std::size_t>(n + 1);
    std::string bad;
    std::string printed_witness;
    for (int s = 0; s < samples && bad.empty(); ++s) {
      std::vector<QScalar> w(N);
      bool nonzero = false;
      for (auto& x : w) {
        x = QScalar(static_cast<long>(rng() % 7) - 3);
        nonzero = nonzero || !x.is_zero();
      }
      if (!nonzero) w[0] = QScalar(1);
      const SchurResult r = scalar_operator_general(n, w);
      if (!r.scalar) bad = "w=" + vec_to_string(w) + " entry " + r.offending;
      if (printed_witness.empty()) {
        const SchurResult p = scalar_operator_general(n, w, IntegrandOrder::Printed);
        if (!p.scalar) printed_witness = "w=" + vec_to_string(w) + " entry " + p.offending;
      }
    }
    const std::string sfx = " n=" + std::to_string(n);
    rep.add("operator is scalar for random w" + sfx, bad.empty(), kAnchorScalarOperator, bad);
    rep.add("integrand order w_1* w_1' is not scalar" + sfx, n == 0 || !printed_witness.empty(), kAnchorScalarOperator,
            printed_witness);
  }
  return rep;
}

}  // namespace suq2
