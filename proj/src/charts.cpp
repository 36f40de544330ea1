#include "suq2/charts.hpp"

#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "suq2/hopf.hpp"
#include "suq2/linalg.hpp"
#include "suq2/rewrite.hpp"

namespace suq2 {

namespace {

const PresentationPtr& chart_algebra(ChartId id) { return id == ChartId::B ? algebra_G_b() : algebra_G_d(); }

NCPoly gen(const PresentationPtr& p, int g, int e = 1) { return NCPoly::gen(p, g, e); }

NCPoly tensor2(const NCPoly& x, const NCPoly& y, const PresentationPtr& t) { return embed(x, t, 0) * embed(y, t, 1); }

// Accumulates sum_v x_v * lin_v + constant = 0 as one row per monomial.
class RowBuilder {
 public:
  void add(std::size_t var, const NCPoly& p) {
    for (const auto& [e, c] : p.terms()) rows_[e].first[var] += c;
  }
  void add_constant(const NCPoly& p) {
    for (const auto& [e, c] : p.terms()) rows_[e].second -= c;
  }
  void flush(LinearSystem& sys) {
    for (auto& [e, r] : rows_) sys.add_equation(r.first, r.second);
    rows_.clear();
  }

 private:
  std::map<Exponents, std::pair<SparseVec, QScalar>, TermOrder> rows_;
};

constexpr std::size_t kBeta = 0;
constexpr std::size_t kDelta = 1;
constexpr std::size_t kPinned = 2;

}  // namespace

std::string chart_name(ChartId id) { return id == ChartId::B ? "b-chart" : "d-chart"; }

PresentationPtr Chart::square() const { return tensor_of({algebra, algebra_borel()}); }

AlgebraMap extend_coaction(ChartId id) {
  const PresentationPtr& A = chart_algebra(id);
  const AlgebraMap iota = inclusion_map(algebra_G(), A);
  const AlgebraMap piota = tensor_map({&iota, &projection_pi()});
  AlgebraMap out(A, tensor_of({A, algebra_borel()}));
  for (int g : {kA, kB, kC, kD}) out.set(g, piota.apply(hopf_G().coproduct.image(g)));
  const int inv = id == ChartId::B ? kB : kD;
  out.set_inverse(inv, invert_monomial(out.image(inv)));
  return out;
}

GaussDecomposition gauss_decompose(ChartId id) {
  const PresentationPtr& A = chart_algebra(id);
  GaussDecomposition g;
  g.swap = id == ChartId::B;
  // Rows of T that feed A21, A22 and the remaining row.
  const int r1 = g.swap ? kA : kC;
  const int r2 = g.swap ? kB : kD;
  const int s1 = g.swap ? kC : kA;
  const int s2 = g.swap ? kD : kB;
  g.A21 = gen(A, r1);
  g.A22 = gen(A, r2);
  g.U12 = gen(A, s2) * gen(A, r2, -1);
  g.A11 = gen(A, s1) - g.U12 * g.A21;
  return g;
}

std::optional<std::string> gauss_residual(const GaussDecomposition& g, const PresentationPtr& A) {
  // U A = [[A11 + U12 A21, U12 A22], [A21, A22]]
  std::vector<std::vector<NCPoly>> ua = {{g.A11 + g.U12 * g.A21, g.U12 * g.A22}, {g.A21, g.A22}};
  if (g.swap) std::swap(ua[0], ua[1]);
  const int t[2][2] = {{kA, kB}, {kC, kD}};
  const char* names[4] = {"a", "b", "c", "d"};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(ua[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == gen(A, t[i][j])))
        return std::string("entry ") + names[t[i][j]] + ": wUA gives " +
               ua[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].to_string();
  return std::nullopt;
}

GammaSolution build_gamma(ChartId id, const std::optional<QScalar>& forced_beta) {
  const PresentationPtr& A = chart_algebra(id);
  const PresentationPtr AB = tensor_of({A, algebra_borel()});
  const GaussDecomposition g = gauss_decompose(id);
  const AlgebraMap rho = extend_coaction(id);
  const NCPoly one = NCPoly::scalar(A, QScalar(1));

  // Ansatz for the image of a Borel letter: (unknown or pinned, Gauss entry).
  auto ansatz = [&](const Exponents& m) -> std::pair<std::size_t, NCPoly> {
    if (m == Exponents{1, 0}) return {kPinned, g.A11};
    if (m == Exponents{-1, 0}) return {kBeta, g.A22};
    if (m == Exponents{0, 1}) return {kDelta, g.A21};
    throw DomainError("gamma ansatz: unexpected coproduct leg");
  };

  LinearSystem sys(2);
  RowBuilder rows;
  auto add = [&](std::size_t var, const NCPoly& p) {
    if (var == kPinned) rows.add_constant(-p);
    else rows.add(var, p);
  };
  // gamma(lambda) gamma(lambda^-1) = 1 = gamma(lambda^-1) gamma(lambda)
  rows.add(kBeta, g.A11 * g.A22);
  rows.add_constant(-one);
  rows.flush(sys);
  rows.add(kBeta, g.A22 * g.A11);
  rows.add_constant(-one);
  rows.flush(sys);
  // lambda xi = q xi lambda
  rows.add(kDelta, g.A11 * g.A21 - QScalar::q() * (g.A21 * g.A11));
  rows.flush(sys);
  // rho_B(gamma(x)) = (gamma (x) id) Delta_B(x)
  const Presentation& bb = *hopf_borel().square;
  for (const Exponents& x : {Exponents{1, 0}, Exponents{-1, 0}, Exponents{0, 1}}) {
    const auto [var, p] = ansatz(x);
    add(var, rho.apply(p));
    const NCPoly dx = hopf_borel().coproduct.apply(NCPoly(algebra_borel(), TermMap{{x, QScalar(1)}}));
    for (const auto& [e, c] : dx.terms()) {
      const auto [v2, p2] = ansatz(factor_part(bb, e, 0));
      const NCPoly leg(algebra_borel(), TermMap{{factor_part(bb, e, 1), QScalar(1)}});
      add(v2, -(c * tensor2(p2, leg, AB)));
    }
    rows.flush(sys);
  }
  if (forced_beta) sys.add_equation(SparseVec{{kBeta, QScalar(1)}}, *forced_beta);

  const auto sol = sys.solve();
  GammaSolution out;
  out.consistent = sol.consistent;
  out.unique = sol.consistent && sol.kernel.empty();
  if (!sol.consistent) return out;
  auto value = [&](std::size_t v) {
    auto it = sol.particular.find(v);
    return it == sol.particular.end() ? QScalar() : it->second;
  };
  out.beta = value(kBeta);
  out.delta = value(kDelta);
  out.gamma = AlgebraMap(algebra_borel(), A);
  out.gamma.set(kLambda, g.A11);
  out.gamma.set_inverse(kLambda, out.beta * g.A22);
  out.gamma.set(kXi, out.delta * g.A21);
  return out;
}

const Chart& chart(ChartId id) {
  static std::mutex mu;
  static std::map<ChartId, Chart> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  Chart c;
  c.id = id;
  c.algebra = chart_algebra(id);
  c.inverted = id == ChartId::B ? kB : kD;
  c.iota = inclusion_map(algebra_G(), c.algebra);
  c.coaction_B = extend_coaction(id);
  c.gauss = gauss_decompose(id);
  c.gamma = build_gamma(id);
  if (!c.gamma.consistent) throw DomainError("no trivialization in the Gauss ansatz for " + chart_name(id));
  c.coinvariant_generator = id == ChartId::B ? gen(c.algebra, kD) * gen(c.algebra, kB, -1)
                                             : gen(c.algebra, kB) * gen(c.algebra, kD, -1);
  return cache.emplace(id, std::move(c)).first->second;
}

NCPoly gamma_of(ChartId id, const NCPoly& chi) { return chart(id).gamma.gamma.apply(chi); }

CoinvariantSlice localized_coinvariants(ChartId id, int degree) {
  const Chart& ch = chart(id);
  const PresentationPtr AB = ch.square();
  const NCPoly unit_b = NCPoly::scalar(algebra_borel(), QScalar(1));
  std::vector<NCPoly> monos;
  std::vector<NCPoly> images;
  for (const auto& e : basis_monomials(*ch.algebra, degree)) {
    monos.emplace_back(ch.algebra, TermMap{{e, QScalar(1)}});
    images.push_back(ch.coaction_B.apply(monos.back()) - tensor2(monos.back(), unit_b, AB));
  }
  CoinvariantSlice out;
  for (const auto& v : kernel_of_images(images)) {
    NCPoly p(ch.algebra);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) p += v[j] * monos[j];
    out.kernel.push_back(std::move(p));
  }
  for (int k = 0; 2 * k <= degree; ++k) out.generator_powers.push_back(ch.coinvariant_generator.pow(k));
  std::vector<NCPoly> all = out.kernel;
  all.insert(all.end(), out.generator_powers.begin(), out.generator_powers.end());
  out.polynomial_in_generator = out.kernel.size() == out.generator_powers.size() &&
                                span_rank(all) == out.generator_powers.size() &&
                                span_rank(out.generator_powers) == out.generator_powers.size();
  return out;
}

Report verify_chart(ChartId id, int samples, std::uint64_t seed) {
  const Chart& ch = chart(id);
  const std::string nm = ch.name();
  Report rep("charts:" + nm, seed);
  const PresentationPtr AB = ch.square();
  const std::string anchor_rho = "unique extension of the Borel coaction to the localization";
  const std::string anchor_gamma = "trivialization gamma: B -> localized G is a B-comodule algebra map";
  const std::string anchor_gauss = "quantum Gauss decomposition T = w U A";

  {
    auto v = ch.coaction_B.relation_violation();
    if (!v) v = ch.coaction_B.inverse_violation();
    rep.add(nm + " coaction is an algebra map", !v, anchor_rho, v.value_or(""));
  }
  {
    const AlgebraMap piota = tensor_map({&ch.iota, &projection_pi()});
    std::string bad;
    for (const auto& e : basis_monomials(*algebra_G(), 3)) {
      const NCPoly m(algebra_G(), TermMap{{e, QScalar(1)}});
      if (!(ch.coaction_B.apply(ch.iota.apply(m)) == piota.apply(hopf_G().coproduct.apply(m)))) {
        bad = m.to_string();
        break;
      }
    }
    rep.add(nm + " coaction restricts to (id (x) pi) Delta on G", bad.empty(), anchor_rho, bad);
  }
  {
    // (rho (x) id) rho = (id (x) Delta_B) rho on generators
    const AlgebraMap idB = identity_map(algebra_borel());
    const AlgebraMap left = tensor_map({&ch.coaction_B, &idB});
    const AlgebraMap idA = identity_map(ch.algebra);
    const AlgebraMap right = tensor_map({&idA, &hopf_borel().coproduct});
    std::string bad;
    for (int g = 0; g < static_cast<int>(ch.algebra->size()); ++g) {
      if (ch.algebra->eliminated(g)) continue;
      for (int e : {1, -1}) {
        if (e < 0 && !ch.algebra->invertible(g)) continue;
        const NCPoly x = gen(ch.algebra, g, e);
        const NCPoly r = ch.coaction_B.apply(x);
        if (!(left.apply(r) == right.apply(r))) bad = x.to_string();
      }
    }
    rep.add(nm + " coaction is coassociative", bad.empty(), anchor_rho, bad);
  }
  {
    const int g = ch.inverted;
    const NCPoly inv = ch.coaction_B.inverse_image(g);
    const NCPoly weight = gen(algebra_borel(), kLambda, -1);
    // rho_B(g) = g (x) lambda^-1 for g = b, d; the inverse carries lambda.
    const NCPoly expected = tensor2(gen(ch.algebra, g, -1), gen(algebra_borel(), kLambda), AB);
    const NCPoly printed = tensor2(gen(ch.algebra, g, -1), weight, AB);
    const NCPoly one = NCPoly::scalar(AB, QScalar(1));
    rep.add(nm + " coaction of the inverted generator", inv == expected, anchor_rho, inv.to_string());
    if (id == ChartId::B)
      rep.add("printed rho_B(b^-1) = b^-1 (x) lambda^-1 is not inverse to rho_B(b)",
              !(ch.coaction_B.image(g) * printed == one), anchor_rho,
              "rho_B(b) * printed = " + (ch.coaction_B.image(g) * printed).to_string());
  }
  {
    auto v = gauss_residual(ch.gauss, ch.algebra);
    rep.add(nm + " gauss decomposition is exact", !v, anchor_gauss, v.value_or(""));
  }
  {
    auto v = ch.gamma.gamma.relation_violation();
    if (!v) v = ch.gamma.gamma.inverse_violation();
    rep.add(nm + " gamma is an algebra map", !v, anchor_gamma, v.value_or(""));
    rep.add(nm + " gamma unique in the Gauss ansatz", ch.gamma.unique, anchor_gamma,
            "beta = " + ch.gamma.beta.to_string() + ", delta = " + ch.gamma.delta.to_string());
  }
  {
    const AlgebraMap idB = identity_map(algebra_borel());
    const AlgebraMap gid = tensor_map({&ch.gamma.gamma, &idB});
    std::mt19937_64 rng(seed);
    std::vector<NCPoly> xs;
    for (int e : {1, -1}) xs.push_back(gen(algebra_borel(), kLambda, e));
    xs.push_back(gen(algebra_borel(), kXi));
    for (int s = 0; s < samples; ++s) xs.push_back(engine_word(algebra_borel(), random_word(*algebra_borel(), 5, rng, 2)));
    std::string bad;
    for (const auto& x : xs)
      if (!(ch.coaction_B.apply(ch.gamma.gamma.apply(x)) == gid.apply(hopf_borel().coproduct.apply(x)))) {
        bad = x.to_string();
        break;
      }
    rep.add(nm + " gamma is a comodule map", bad.empty(), anchor_gamma, bad);
  }
  {
    std::string bad;
    for (int n = 0; n <= 4 && bad.empty(); ++n) {
      const NCPoly chi = gen(algebra_borel(), kLambda, -n);
      const NCPoly gc = ch.gamma.gamma.apply(chi);
      if (!(ch.coaction_B.apply(gc) == tensor2(gc, chi, AB))) bad = "n=" + std::to_string(n);
      if (id == ChartId::D && !(gc == gen(ch.algebra, kD, n))) bad = "gamma_d(lambda^-n) != d^n at n=" + std::to_string(n);
    }
    rep.add(nm + " gamma(lambda^-n) is a weight vector", bad.empty(), anchor_gamma, bad);
  }
  {
    const NCPoly u = ch.coinvariant_generator;
    const NCPoly unit_b = NCPoly::scalar(algebra_borel(), QScalar(1));
    rep.add(nm + " coinvariant generator " + u.to_string(), ch.coaction_B.apply(u) == tensor2(u, unit_b, AB),
            "localized coinvariants C[u], u = b d^-1 and u' = d b^-1");
  }
  if (id == ChartId::D) {
    const NCPoly l = parse_poly(ch.algebra, "a - b d^-1 c");
    const bool ok = ch.gamma.gamma.image(kLambda) == l && ch.gamma.gamma.image(kXi) == gen(ch.algebra, kC) &&
                    ch.gamma.gamma.inverse_image(kLambda) == gen(ch.algebra, kD);
    rep.add("d-chart gamma matches gamma_d(lambda) = a - b d^-1 c, gamma_d(xi) = c, gamma_d(lambda^-1) = d", ok,
            anchor_gamma);
  } else {
    AlgebraMap printed(algebra_borel(), ch.algebra);
    printed.set(kLambda, gen(ch.algebra, kA));
    printed.set_inverse(kLambda, gen(ch.algebra, kB));
    printed.set(kXi, parse_poly(ch.algebra, "c - d b^-1 a"));
    auto v = printed.inverse_violation();
    if (!v) v = printed.relation_violation();
    rep.add("printed gamma_b(lambda) = a, gamma_b(lambda^-1) = b is rejected", v.has_value(), anchor_gamma,
            v.value_or(""));
    const GammaSolution forced = build_gamma(id, QScalar(1));
    rep.add("b-chart gamma with gamma(lambda^-1) = b forced is inconsistent", !forced.consistent, anchor_gamma);
  }
  return rep;
}

EqualizerResult cover_equalizer(int degree) {
  const PresentationPtr& G = algebra_G();
  const PresentationPtr& Gb = algebra_G_b();
  const PresentationPtr& Gd = algebra_G_d();
  const PresentationPtr& Gbd = algebra_G_bd();
  const AlgebraMap ib = inclusion_map(G, Gb);
  const AlgebraMap id = inclusion_map(G, Gd);
  const AlgebraMap jb = inclusion_map(Gb, Gbd);
  const AlgebraMap jd = inclusion_map(Gd, Gbd);

  std::vector<NCPoly> gmon;
  for (const auto& e : basis_monomials(*G, degree)) gmon.emplace_back(G, TermMap{{e, QScalar(1)}});
  std::vector<Exponents> bslice = basis_monomials(*Gb, degree);
  std::set<Exponents> dset;
  for (const auto& e : basis_monomials(*Gd, degree)) dset.insert(e);
  for (const auto& m : gmon) {
    const NCPoly im = id.apply(m);
    for (const auto& [e, c] : im.terms()) dset.insert(e);
  }
  std::vector<Exponents> dslice(dset.begin(), dset.end());

  EqualizerResult r;
  r.g_monomials = gmon.size();
  {
    std::vector<NCPoly> bimg;
    std::vector<NCPoly> dimg;
    for (const auto& m : gmon) {
      bimg.push_back(ib.apply(m));
      dimg.push_back(id.apply(m));
    }
    r.injective = span_rank(bimg) == gmon.size() && span_rank(dimg) == gmon.size();
  }
  std::vector<NCPoly> images;
  for (const auto& e : bslice) images.push_back(jb.apply(NCPoly(Gb, TermMap{{e, QScalar(1)}})));
  for (const auto& e : dslice) images.push_back(-jd.apply(NCPoly(Gd, TermMap{{e, QScalar(1)}})));
  const auto ker = kernel_of_images(images);
  r.kernel_dim = ker.size();
  r.all_from_G = true;
  for (const auto& v : ker) {
    NCPoly fb(Gb);
    NCPoly fd(Gd);
    for (std::size_t j = 0; j < bslice.size(); ++j)
      if (!v[j].is_zero()) fb += v[j] * NCPoly(Gb, TermMap{{bslice[j], QScalar(1)}});
    for (std::size_t j = 0; j < dslice.size(); ++j)
      if (!v[bslice.size() + j].is_zero()) fd += v[bslice.size() + j] * NCPoly(Gd, TermMap{{dslice[j], QScalar(1)}});
    NCPoly g(G);
    bool lifts = true;
    for (const auto& [e, c] : fb.terms()) {
      for (int x : e) lifts = lifts && x >= 0;
      g += NCPoly(G, TermMap{{e, c}});
    }
    if (!lifts || !(ib.apply(g) == fb) || !(id.apply(g) == fd)) {
      r.all_from_G = false;
      r.witness = "(" + fb.to_string() + ", " + fd.to_string() + ")";
      break;
    }
  }
  return r;
}

std::string chart_dump() {
  std::ostringstream os;
  for (ChartId id : {ChartId::B, ChartId::D}) {
    const Chart& ch = chart(id);
    const Presentation& A = *ch.algebra;
    os << ch.name() << " over " << A.name() << "\n";
    for (int g = 0; g < static_cast<int>(A.size()); ++g) {
      if (A.eliminated(g)) continue;
      os << "  rho_B(" << A.generator(static_cast<std::size_t>(g)).name << ") = " << ch.coaction_B.image(g) << "\n";
      if (A.invertible(g))
        os << "  rho_B(" << A.generator(static_cast<std::size_t>(g)).name << "^-1) = " << ch.coaction_B.inverse_image(g)
           << "\n";
    }
    os << "  w = " << (ch.gauss.swap ? "[[0, 1], [1, 0]]" : "[[1, 0], [0, 1]]") << "\n";
    os << "  U12 = " << ch.gauss.U12 << "\n";
    os << "  A11 = " << ch.gauss.A11 << "\n";
    os << "  A21 = " << ch.gauss.A21 << "\n";
    os << "  A22 = " << ch.gauss.A22 << "\n";
    os << "  gamma(lambda) = " << ch.gamma.gamma.image(kLambda) << "\n";
    os << "  gamma(lambda^-1) = " << ch.gamma.gamma.inverse_image(kLambda) << "\n";
    os << "  gamma(xi) = " << ch.gamma.gamma.image(kXi) << "\n";
    os << "  coinvariant generator = " << ch.coinvariant_generator << "\n";
  }
  return os.str();
}

Report verify_charts(int max_degree, int samples, std::uint64_t seed) {
  Report rep("charts", seed);
  for (ChartId id : {ChartId::B, ChartId::D}) {
    rep.merge(verify_chart(id, samples, seed), "");
    const std::string nm = chart_name(id);
    std::string bad;
    for (int k = 1; 2 * k <= max_degree + (max_degree % 2) && bad.empty(); ++k) {
      const CoinvariantSlice s = localized_coinvariants(id, 2 * k);
      if (!s.polynomial_in_generator)
        bad = "degree " + std::to_string(2 * k) + ": dimension " + std::to_string(s.kernel.size());
    }
    rep.add(nm + " localized coinvariants are polynomials in " + chart(id).coinvariant_generator.to_string(),
            bad.empty(), "localized coinvariants C[u], u = b d^-1 and u' = d b^-1", bad);
  }
  {
    // b d^-1 only makes sense in G_d; the b-chart generator is d b^-1.
    const CoinvariantSlice sb = localized_coinvariants(ChartId::B, 2);
    bool has_db = false;
    for (const auto& p : sb.kernel)
      has_db = has_db || !p.coeff(parse_poly(algebra_G_b(), "d b^-1").terms().begin()->first).is_zero();
    rep.add("coinvariant labels: u = b d^-1 on G_d, u' = d b^-1 on G_b", has_db,
            "localized coinvariants C[u], u = b d^-1 and u' = d b^-1");
  }
  for (int d = 1; d <= max_degree; ++d) {
    const EqualizerResult e = cover_equalizer(d);
    rep.add("cover equalizer degree " + std::to_string(d), e.ok(), "the b and d localizations cover G",
            e.ok() ? "" : "kernel " + std::to_string(e.kernel_dim) + " vs " + std::to_string(e.g_monomials) + " " +
                              e.witness);
  }
  return rep;
}

}  // namespace suq2
