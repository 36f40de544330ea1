#include "suq2/bundle.hpp"

#include <map>
#include <random>

#include "suq2/hopf.hpp"
#include "suq2/linalg.hpp"
#include "suq2/rewrite.hpp"

namespace suq2 {

namespace {

NCPoly tensor2(const NCPoly& x, const NCPoly& y, const PresentationPtr& t) { return embed(x, t, 0) * embed(y, t, 1); }

NCPoly borel_chi(int n) { return NCPoly::gen(algebra_borel(), kLambda, -n); }

NCPoly mono(const PresentationPtr& p, const Exponents& e) { return NCPoly(p, TermMap{{e, QScalar(1)}}); }

const std::string kAnchorKappa = "kappa and kappa_bar are mutually inverse";
const std::string kAnchorSections = "sections glue: f_b gamma_b(chi) = f_d gamma_d(chi)";
const std::string kAnchorIso = "sections are isomorphic to the cotensor product and respect the G-coaction";

}  // namespace

PolyMatrix convert_side(const PolyMatrix& m, const AlgebraMap& antipode) { return map_matrix(m, antipode); }

LeftComodule character_comodule(const NCPoly& chi) {
  return {"C(" + chi.to_string() + ")", PolyMatrix{{chi}}};
}

LeftComodule trivial_comodule() { return character_comodule(NCPoly::scalar(algebra_borel(), QScalar(1))); }

LeftComodule vn_left_borel(int n) {
  const PolyMatrix right = map_matrix(vn(n).matrix, projection_pi());
  return {"V_" + std::to_string(n), convert_side(right, hopf_borel().antipode)};
}

ChartVector kappa(ChartId id, const LeftComodule& m, const ChartVector& F) {
  const AlgebraMap& g = chart(id).gamma.gamma;
  ChartVector out(m.dim(), NCPoly(chart(id).algebra));
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (std::size_t k = 0; k < m.dim(); ++k) out[j] += F[k] * g.apply(m.L[j][k]);
  return out;
}

ChartVector kappa_bar(ChartId id, const LeftComodule& m, const ChartVector& F) {
  const AlgebraMap& g = chart(id).gamma.gamma;
  const AlgebraMap& S = hopf_borel().antipode;
  ChartVector out(m.dim(), NCPoly(chart(id).algebra));
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (std::size_t k = 0; k < m.dim(); ++k) out[j] += F[k] * g.apply(S.apply(m.L[j][k]));
  return out;
}

bool in_cotensor(ChartId id, const LeftComodule& m, const ChartVector& F) {
  const Chart& ch = chart(id);
  const PresentationPtr AB = ch.square();
  for (std::size_t j = 0; j < m.dim(); ++j) {
    NCPoly rhs(AB);
    for (std::size_t k = 0; k < m.dim(); ++k) rhs += tensor2(F[k], m.L[j][k], AB);
    if (!(ch.coaction_B.apply(F[j]) == rhs)) return false;
  }
  return true;
}

bool is_coinvariant(ChartId id, const ChartVector& F) {
  const Chart& ch = chart(id);
  const NCPoly one = NCPoly::scalar(algebra_borel(), QScalar(1));
  for (const auto& f : F)
    if (!(ch.coaction_B.apply(f) == tensor2(f, one, ch.square()))) return false;
  return true;
}

std::vector<ChartVector> cotensor_subspace(ChartId id, const LeftComodule& m, int degree) {
  const Chart& ch = chart(id);
  const PresentationPtr AB = ch.square();
  const std::vector<Exponents> monos = basis_monomials(*ch.algebra, degree);
  const std::size_t M = m.dim();
  const std::size_t P = monos.size();
  std::map<std::pair<std::size_t, Exponents>, SparseVec> rows;
  for (std::size_t k = 0; k < M; ++k)
    for (std::size_t p = 0; p < P; ++p) {
      const NCPoly x = mono(ch.algebra, monos[p]);
      const std::size_t var = k * P + p;
      const NCPoly rx = ch.coaction_B.apply(x);
      for (const auto& [e, c] : rx.terms()) rows[{k, e}][var] += c;
      for (std::size_t j = 0; j < M; ++j) {
        const NCPoly t = tensor2(x, m.L[j][k], AB);
        for (const auto& [e, c] : t.terms()) rows[{j, e}][var] -= c;
      }
    }
  LinearSystem sys(M * P);
  for (auto& [key, row] : rows) sys.add_equation(row);
  std::vector<ChartVector> out;
  for (const auto& v : sys.solve().kernel) {
    ChartVector F(M, NCPoly(ch.algebra));
    for (const auto& [var, c] : v) F[var / P] += c * mono(ch.algebra, monos[var % P]);
    out.push_back(std::move(F));
  }
  return out;
}

CotensorSlice cotensor_slice(int n, int degree) {
  const PresentationPtr& G = algebra_G();
  const PresentationPtr GB = tensor_of({G, algebra_borel()});
  const AlgebraMap idG = identity_map(G);
  const AlgebraMap rho = tensor_map({&idG, &projection_pi()});
  const NCPoly chi = borel_chi(n);
  std::vector<NCPoly> monos;
  std::vector<NCPoly> images;
  for (const auto& e : basis_monomials(*G, degree)) {
    monos.push_back(mono(G, e));
    images.push_back(rho.apply(coproduct(monos.back())) - tensor2(monos.back(), chi, GB));
  }
  CotensorSlice s;
  s.n = n;
  s.degree = degree;
  for (const auto& v : kernel_of_images(images)) {
    NCPoly p(G);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) p += v[j] * monos[j];
    s.basis.push_back(std::move(p));
  }
  return s;
}

std::vector<Section> sections_space(int n, int degree) {
  const NCPoly chi = borel_chi(n);
  const NCPoly gb = gamma_of(ChartId::B, chi);
  const NCPoly gd = gamma_of(ChartId::D, chi);
  const AlgebraMap jb = inclusion_map(algebra_G_b(), algebra_G_bd());
  const AlgebraMap jd = inclusion_map(algebra_G_d(), algebra_G_bd());
  const NCPoly ub = chart(ChartId::B).coinvariant_generator;
  const NCPoly ud = chart(ChartId::D).coinvariant_generator;
  const auto K = static_cast<std::size_t>(degree + 1);
  std::vector<NCPoly> images;
  for (std::size_t k = 0; k < K; ++k) images.push_back(jb.apply(ub.pow(static_cast<int>(k)) * gb));
  for (std::size_t k = 0; k < K; ++k) images.push_back(-jd.apply(ud.pow(static_cast<int>(k)) * gd));
  std::vector<Section> out;
  for (const auto& v : kernel_of_images(images)) {
    Section s{NCPoly(algebra_G_b()), NCPoly(algebra_G_d())};
    for (std::size_t k = 0; k < K; ++k) {
      s.f_b += v[k] * ub.pow(static_cast<int>(k));
      s.f_d += v[K + k] * ud.pow(static_cast<int>(k));
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool glues(const Section& s, int n) {
  const NCPoly chi = borel_chi(n);
  const AlgebraMap jb = inclusion_map(algebra_G_b(), algebra_G_bd());
  const AlgebraMap jd = inclusion_map(algebra_G_d(), algebra_G_bd());
  return jb.apply(s.f_b * gamma_of(ChartId::B, chi)) == jd.apply(s.f_d * gamma_of(ChartId::D, chi));
}

Section glue(const NCPoly& g, int n) {
  const NCPoly inv = NCPoly::gen(algebra_borel(), kLambda, n);
  return {chart(ChartId::B).iota.apply(g) * gamma_of(ChartId::B, inv),
          chart(ChartId::D).iota.apply(g) * gamma_of(ChartId::D, inv)};
}

PolyMatrix slice_coaction(const CotensorSlice& s) {
  const PresentationPtr& G = algebra_G();
  const std::size_t N = s.basis.size();
  const Presentation& GG = *hopf_G().square;
  PolyMatrix R(N, std::vector<NCPoly>(N, NCPoly(G)));
  for (std::size_t j = 0; j < N; ++j) {
    std::map<Exponents, NCPoly, TermOrder> legs;
    const NCPoly dj = coproduct(s.basis[j]);
    for (const auto& [e, c] : dj.terms()) {
      auto it = legs.try_emplace(factor_part(GG, e, 0), NCPoly(G)).first;
      it->second += c * mono(G, factor_part(GG, e, 1));
    }
    for (const auto& [m1, second] : legs) {
      const auto coords = express_in_span(second, s.basis);
      if (!coords) throw DomainError("slice is not a subcomodule: " + second.to_string());
      const NCPoly sm = antipode(mono(G, m1));
      for (std::size_t i = 0; i < N; ++i)
        if (!(*coords)[i].is_zero()) R[i][j] += (*coords)[i] * sm;
    }
  }
  return R;
}

Intertwiner slice_intertwiner(const CotensorSlice& s) {
  Intertwiner out;
  const VnComodule& v = vn(s.n);
  const std::size_t N = v.dim();
  if (s.basis.size() != N) return out;
  const PolyMatrix R = slice_coaction(s);
  LinearSystem sys(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      std::map<Exponents, SparseVec, TermOrder> rows;
      for (std::size_t k = 0; k < N; ++k) {
        for (const auto& [e, c] : v.matrix[k][j].terms()) rows[e][i * N + k] += c;
        for (const auto& [e, c] : R[i][k].terms()) rows[e][k * N + j] -= c;
      }
      for (auto& [e, row] : rows) sys.add_equation(row);
    }
  const auto sol = sys.solve();
  out.solution_dim = sol.kernel.size();
  if (sol.kernel.empty()) return out;
  out.found = true;
  const auto dense = densify(sol.kernel.front(), N * N);
  out.phi.assign(N, std::vector<QScalar>(N));
  for (std::size_t idx = 0; idx < N * N; ++idx) out.phi[idx / N][idx % N] = dense[idx];
  out.invertible = matrix_rank(out.phi) == N;
  return out;
}

Report glue_iso_check(int n, int degree) {
  Report rep("bundle:glue n=" + std::to_string(n), 0);
  const std::string sfx = " n=" + std::to_string(n);
  const CotensorSlice slice = cotensor_slice(n, degree);
  const auto secs = sections_space(n, degree);
  rep.add("glue: slice and sections have equal dimension" + sfx, slice.basis.size() == secs.size(), kAnchorIso,
          std::to_string(slice.basis.size()) + " vs " + std::to_string(secs.size()));
  std::string bad;
  std::vector<NCPoly> fds;
  for (const auto& g : slice.basis) {
    const Section s = glue(g, n);
    fds.push_back(s.f_d);
    if (!is_coinvariant(ChartId::B, {s.f_b}) || !is_coinvariant(ChartId::D, {s.f_d}) || !glues(s, n)) {
      bad = g.to_string();
      break;
    }
  }
  rep.add("glue maps the slice into sections" + sfx, bad.empty(), kAnchorIso, bad);
  rep.add("glue is injective" + sfx, span_rank(fds) == slice.basis.size(), kAnchorIso);
  const Intertwiner it = slice_intertwiner(slice);
  rep.add("slice coaction is isomorphic to V_n" + sfx, it.found && it.invertible && it.solution_dim == 1, kAnchorIso,
          "solution dimension " + std::to_string(it.solution_dim));
  return rep;
}

Report verify_bundle(int nmax, int max_degree, int samples, std::uint64_t seed) {
  Report rep("bundle", seed);
  for (int n = 0; n <= nmax; ++n) {
    const std::string sfx = " n=" + std::to_string(n);
    std::string bad;
    for (int d = n + 1; d <= std::max(max_degree, n + 1) && bad.empty(); ++d) {
      const std::size_t ds = cotensor_slice(n, d).basis.size();
      const std::size_t dsec = sections_space(n, d).size();
      if (ds != static_cast<std::size_t>(n + 1) || dsec != static_cast<std::size_t>(n + 1))
        bad = "degree " + std::to_string(d) + ": slice " + std::to_string(ds) + ", sections " + std::to_string(dsec);
    }
    rep.add("dimension n+1 stable under cutoff" + sfx, bad.empty(), kAnchorSections, bad);
    rep.merge(glue_iso_check(n, n + 2), "");
  }

  std::mt19937_64 rng(seed);
  std::string bad;
  for (int s = 0; s < samples && bad.empty(); ++s) {
    const ChartId id = (s % 2 == 0) ? ChartId::D : ChartId::B;
    const int pick = static_cast<int>(rng() % 8);
    const LeftComodule m = pick < 5 ? character_comodule(borel_chi(pick)) : vn_left_borel(pick - 5);
    const PresentationPtr& A = chart(id).algebra;
    ChartVector F;
    for (std::size_t k = 0; k < m.dim(); ++k) F.push_back(engine_word(A, random_word(*A, 4, rng, 2)));
    if (!(kappa(id, m, kappa_bar(id, m, F)) == F) || !(kappa_bar(id, m, kappa(id, m, F)) == F))
      bad = chart_name(id) + " " + m.name + " F_0 = " + F[0].to_string();
  }
  rep.add("kappa kappa_bar = id = kappa_bar kappa on random inputs", bad.empty(), kAnchorKappa, bad);

  {
    const ChartId id = ChartId::D;
    const NCPoly chi = borel_chi(2);
    const NCPoly f = parse_poly(algebra_G_d(), "1 + b d^-1");
    const ChartVector k = kappa(id, character_comodule(chi), {f});
    const ChartVector t = kappa(id, trivial_comodule(), {f});
    rep.add("kappa on C_chi multiplies by gamma(chi)", k[0] == f * gamma_of(id, chi), kAnchorKappa, k[0].to_string());
    rep.add("kappa on the trivial comodule is the identity", t[0] == f, kAnchorKappa);
  }

  std::string img_bad;
  for (ChartId id : {ChartId::B, ChartId::D}) {
    std::vector<LeftComodule> ms = {character_comodule(borel_chi(1)), character_comodule(borel_chi(2)),
                                    vn_left_borel(1)};
    const NCPoly u = chart(id).coinvariant_generator;
    for (const auto& m : ms) {
      for (int p = 0; p <= 2; ++p)
        for (std::size_t j = 0; j < m.dim(); ++j) {
          ChartVector F(m.dim(), NCPoly(chart(id).algebra));
          F[j] = u.pow(p);
          if (!in_cotensor(id, m, kappa(id, m, F))) img_bad = chart_name(id) + " kappa " + m.name;
        }
      for (const auto& F : cotensor_subspace(id, m, 3))
        if (!is_coinvariant(id, kappa_bar(id, m, F))) img_bad = chart_name(id) + " kappa_bar " + m.name;
    }
  }
  rep.add("kappa maps coinvariants (x) M onto the cotensor subspace", img_bad.empty(), kAnchorKappa, img_bad);
  return rep;
}

}  // namespace suq2
