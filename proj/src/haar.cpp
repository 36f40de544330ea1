#include "suq2/haar.hpp"

#include <random>

#include "suq2/hopf.hpp"

namespace suq2 {

namespace {

const std::string kAnchor = "Haar integral on SU_q(2): integral zeta^r = (1 - q^-2)/(1 - q^(-2(r+1)))";

NCPoly mono(const PresentationPtr& p, const Exponents& e) { return NCPoly(p, TermMap{{e, QScalar(1)}}); }

// (id (x) h) or (h (x) id) on G (x) G.
NCPoly integrate_leg(const NCPoly& t, std::size_t slot) {
  const Presentation& tp = *t.presentation();
  NCPoly out(algebra_G());
  for (const auto& [e, c] : t.terms()) {
    const QScalar h = haar(mono(algebra_G(), factor_part(tp, e, slot)));
    if (!h.is_zero()) out += (c * h) * mono(algebra_G(), factor_part(tp, e, 1 - slot));
  }
  return out;
}

}  // namespace

QScalar zeta_integral(int r) {
  const QScalar one(1);
  return (one - QScalar::q_pow(-2)) / (one - QScalar::q_pow(-2L * (r + 1)));
}

QScalar haar(const NCPoly& p) {
  if (p.presentation()->name() != algebra_G()->name())
    throw DomainError("the Haar integral is defined on G only, not on " + p.presentation()->name());
  QScalar s;
  for (const auto& [e, c] : p.terms()) {
    if (e[kA] != 0 || e[kD] != 0 || e[kB] != e[kC]) continue;
    s += c * QScalar(-1).pow(e[kB]) * QScalar::q_pow(-e[kB]) * zeta_integral(e[kB]);
  }
  return s;
}

NCPoly zeta_power(int k) {
  const NCPoly zeta = -QScalar::q() * (NCPoly::gen(algebra_G(), kB) * NCPoly::gen(algebra_G(), kC));
  return zeta.pow(k);
}

NCPoly zeta_polynomial(const ScalarPoly& f) {
  NCPoly out(algebra_G());
  for (std::size_t k = 0; k < f.coeffs().size(); ++k)
    if (!f.coeff(k).is_zero()) out += f.coeff(k) * zeta_power(static_cast<int>(k));
  return out;
}

Report verify_invariance(int degree) {
  Report rep("haar:invariance", 0);
  std::string left;
  std::string right;
  for (const auto& e : basis_monomials(*algebra_G(), degree)) {
    const NCPoly m = mono(algebra_G(), e);
    const NCPoly d = coproduct(m);
    const NCPoly expect = NCPoly::scalar(algebra_G(), haar(m));
    if (left.empty() && !(integrate_leg(d, 1) == expect)) left = m.to_string();
    if (right.empty() && !(integrate_leg(d, 0) == expect)) right = m.to_string();
  }
  rep.add("left invariance (id (x) h) Delta = h(.) 1", left.empty(), "left-invariant integral", left);
  rep.add("right invariance (h (x) id) Delta = h(.) 1", right.empty(), "right-invariant integral", right);
  return rep;
}

Report verify_positivity(const QRational& q0, int samples, int degree, std::uint64_t seed) {
  Report rep("haar:positivity", seed);
  std::mt19937_64 rng(seed);
  const auto monos = basis_monomials(*algebra_G(), degree);
  std::string bad;
  for (int s = 0; s < samples && bad.empty(); ++s) {
    NCPoly f(algebra_G());
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      const long c = static_cast<long>(rng() % 7) - 3;
      f += QScalar(c == 0 ? 1 : c) * mono(algebra_G(), monos[rng() % monos.size()]);
    }
    if (f.is_zero()) f = NCPoly::scalar(algebra_G(), QScalar(1));
    const QRational v = specialize(haar(f * star(f)), q0);
    if (v <= 0) bad = f.to_string() + " -> " + rational_to_string(v);
  }
  rep.add("h(f f*) > 0 at q=" + rational_to_string(q0), bad.empty(), "Haar state is positive", bad);
  return rep;
}

Report verify_haar(int degree, int samples, const QRational& q0, std::uint64_t seed) {
  Report rep("haar", seed);
  rep.merge(verify_invariance(degree), "");
  rep.merge(verify_positivity(q0, samples, 3, seed), "");
  {
    std::string bad;
    for (const auto& e : basis_monomials(*algebra_G(), degree)) {
      const NCPoly m = mono(algebra_G(), e);
      if (!(haar(star(m)) == haar(m).conj())) {
        bad = m.to_string();
        break;
      }
    }
    rep.add("h(m*) = conj h(m) on basis monomials", bad.empty(), kAnchor, bad);
  }
  {
    rep.add("h(1) = 1", haar(NCPoly::scalar(algebra_G(), QScalar(1))).is_one(), kAnchor);
    std::string bad;
    for (int r = 0; r <= 6 && bad.empty(); ++r)
      if (!(haar(zeta_power(r)) == zeta_integral(r))) bad = "r=" + std::to_string(r);
    rep.add("h(zeta^r) matches the moment formula, r <= 6", bad.empty(), kAnchor, bad);
  }
  {
    // Stated closed form q^-r / [r+1]_q; the moments are q^r / [r+1]_q.
    std::string bad;
    for (int r = 0; r <= 6 && bad.empty(); ++r) {
      const QScalar h = haar(zeta_power(r));
      const QScalar stated = QScalar::q_pow(-r) / q_number(r + 1);
      if (!(h == stated))
        bad = "r=" + std::to_string(r) + ": h(zeta^r) = " + h.to_string() + ", q^-r/[r+1] = " + stated.to_string();
    }
    rep.add("h(zeta^r) = q^-r / [r+1]_q, r <= 6", bad.empty(), "zeta moments in terms of symmetric q-numbers", bad);
    bad.clear();
    for (int r = 0; r <= 6 && bad.empty(); ++r)
      if (!(haar(zeta_power(r)) == QScalar::q_pow(r) / q_number(r + 1))) bad = "r=" + std::to_string(r);
    rep.add("h(zeta^r) = q^r / [r+1]_q, r <= 6", bad.empty(), "zeta moments in terms of symmetric q-numbers", bad);
  }
  {
    const QScalar dd = haar(parse_poly(algebra_G(), "d a"));
    rep.add("h(d d*) = q^2/(q^2 + 1)", dd == QScalar::q_pow(2) / (QScalar::q_pow(2) + QScalar(1)), kAnchor,
            dd.to_string());
  }
  return rep;
}

}  // namespace suq2
