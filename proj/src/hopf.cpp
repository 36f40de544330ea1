#include "suq2/hopf.hpp"

#include <random>

#include "suq2/linalg.hpp"
#include "suq2/rewrite.hpp"

namespace suq2 {

namespace {

NCPoly g_gen(int g) { return NCPoly::gen(algebra_G(), g); }

// x (x) y in the given two-factor presentation.
NCPoly tensor2(const NCPoly& x, const NCPoly& y, const PresentationPtr& t) { return embed(x, t, 0) * embed(y, t, 1); }

// Matrix entries t_ij of T = [[a, b], [c, d]] as generator indices.
constexpr int kT[2][2] = {{kA, kB}, {kC, kD}};

AlgebraMap make_g_coproduct(bool corrupt) {
  const auto& G = algebra_G();
  PresentationPtr GG = tensor_of({G, G});
  AlgebraMap m(G, GG);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      NCPoly img(GG);
      for (int k = 0; k < 2; ++k) img += tensor2(g_gen(kT[i][k]), g_gen(kT[k][j]), GG);
      m.set(kT[i][j], img);
    }
  if (corrupt) m.set(kB, tensor2(g_gen(kA), g_gen(kB), GG) + tensor2(g_gen(kD), g_gen(kB), GG));
  return m;
}

AlgebraMap make_g_counit() {
  AlgebraMap m(algebra_G(), algebra_scalars());
  for (int g : {kA, kB, kC, kD})
    m.set(g, NCPoly::scalar(algebra_scalars(), QScalar((g == kA || g == kD) ? 1 : 0)));
  return m;
}

AlgebraMap make_g_star() {
  const auto& G = algebra_G();
  AlgebraMap m(G, G, true, true);
  m.set(kA, g_gen(kD));
  m.set(kB, -QScalar::q() * g_gen(kC));
  m.set(kC, -QScalar::q_pow(-1) * g_gen(kB));
  m.set(kD, g_gen(kA));
  return m;
}

HopfStructure build_g(bool corrupt) {
  const auto& G = algebra_G();
  return HopfStructure{G, tensor_of({G, G}), make_g_coproduct(corrupt), make_g_counit(), solve_antipode_G().antipode,
                       make_g_star()};
}

}  // namespace

AntipodeSolution solve_antipode_G() {
  const auto& G = algebra_G();
  auto unknown = [](int g, int h) { return static_cast<std::size_t>(g * 4 + h); };
  LinearSystem sys(16);
  for (int side = 0; side < 2; ++side) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::map<Exponents, SparseVec, TermOrder> rows;
        for (int k = 0; k < 2; ++k)
          for (int h = 0; h < 4; ++h) {
            // side 0: S(t_ik) t_kj; side 1: t_ik S(t_kj)
            const int g = side == 0 ? kT[i][k] : kT[k][j];
            const NCPoly prod = side == 0 ? g_gen(h) * g_gen(kT[k][j]) : g_gen(kT[i][k]) * g_gen(h);
            for (const auto& [e, c] : prod.terms()) rows[e][unknown(g, h)] += c;
          }
        const Exponents one = G->zero_exponents();
        rows.try_emplace(one);
        for (auto& [e, row] : rows) sys.add_equation(row, (e == one && i == j) ? QScalar(1) : QScalar());
      }
  }
  LinearSystem::Solution s = sys.solve();
  if (!s.consistent) throw DomainError("antipode: convolution identity has no linear solution");
  AlgebraMap S(G, G, true);
  for (int g = 0; g < 4; ++g) {
    NCPoly img(G);
    for (int h = 0; h < 4; ++h) {
      auto it = s.particular.find(unknown(g, h));
      if (it != s.particular.end()) img += it->second * g_gen(h);
    }
    S.set(g, img);
  }
  return {S, s.kernel.empty()};
}

const HopfStructure& hopf_G() {
  static const HopfStructure h = build_g(false);
  return h;
}

HopfStructure corrupted_hopf_G() { return build_g(true); }

const AlgebraMap& projection_pi() {
  static const AlgebraMap pi = [] {
    const auto& B = algebra_borel();
    AlgebraMap m(algebra_G(), B);
    m.set(kA, NCPoly::gen(B, kLambda));
    m.set(kB, NCPoly(B));
    m.set(kC, NCPoly::gen(B, kXi));
    m.set(kD, NCPoly::gen(B, kLambda, -1));
    return m;
  }();
  return pi;
}

const HopfStructure& hopf_borel() {
  static const HopfStructure h = [] {
    const auto& B = algebra_borel();
    const HopfStructure& g = hopf_G();
    const AlgebraMap& pi = projection_pi();
    AlgebraMap pipi = tensor_map({&pi, &pi});
    PresentationPtr BB = tensor_of({B, B});
    AlgebraMap cop(B, BB);
    AlgebraMap eps(B, algebra_scalars());
    AlgebraMap S(B, B, true);
    // Preimages: lambda <- a, xi <- c, lambda^-1 <- d.
    auto lift = [&](int borel_gen, int g_gen_idx, bool inverse) {
      const NCPoly x = NCPoly::gen(algebra_G(), g_gen_idx);
      NCPoly d = pipi.apply(g.coproduct.apply(x));
      NCPoly e = g.counit.apply(x);
      NCPoly s = pi.apply(g.antipode.apply(x));
      if (inverse) {
        cop.set_inverse(borel_gen, d);
        eps.set_inverse(borel_gen, e);
        S.set_inverse(borel_gen, s);
      } else {
        cop.set(borel_gen, d);
        eps.set(borel_gen, e);
        S.set(borel_gen, s);
      }
    };
    lift(kLambda, kA, false);
    lift(kXi, kC, false);
    lift(kLambda, kD, true);
    return HopfStructure{B, BB, cop, eps, S, std::nullopt};
  }();
  return h;
}

NCPoly coproduct(const NCPoly& p) {
  const std::string& n = p.presentation()->name();
  if (n == "G") return hopf_G().coproduct.apply(p);
  if (n == "Borel") return hopf_borel().coproduct.apply(p);
  throw DomainError("coproduct is defined on G and Borel, not on " + n);
}

QScalar counit(const NCPoly& p) {
  const std::string& n = p.presentation()->name();
  if (n == "G") return hopf_G().counit.apply(p).constant_term();
  if (n == "Borel") return hopf_borel().counit.apply(p).constant_term();
  throw DomainError("counit is defined on G and Borel, not on " + n);
}

NCPoly antipode(const NCPoly& p) {
  const std::string& n = p.presentation()->name();
  if (n == "G") return hopf_G().antipode.apply(p);
  if (n == "Borel") return hopf_borel().antipode.apply(p);
  throw DomainError("antipode of an element outside G or Borel (" + n + ")");
}

NCPoly star(const NCPoly& p) {
  const auto& pres = p.presentation();
  const std::string& n = pres->name();
  if (n == "G") return hopf_G().star->apply(p);
  if (n == "G_b" || n == "G_d" || n == "G_bd") {
    NCPoly lifted(algebra_G());
    for (const auto& [e, c] : p.terms()) {
      for (int x : e)
        if (x < 0) throw DomainError("star is not defined on localized monomials: " + p.to_string());
      lifted += NCPoly(algebra_G(), TermMap{{e, c}});
    }
    return inclusion_map(algebra_G(), pres).apply(hopf_G().star->apply(lifted));
  }
  throw DomainError("star is not defined on " + n);
}

bool is_group_like(const NCPoly& p) {
  if (p.is_zero()) return false;
  const HopfStructure& h = p.presentation()->name() == "G" ? hopf_G() : hopf_borel();
  if (p.presentation()->name() != h.algebra->name()) throw DomainError("is_group_like: unsupported algebra");
  return h.coproduct.apply(p) == tensor2(p, p, h.square) && h.counit.apply(p).constant_term().is_one();
}

NCPoly multiply_legs(const NCPoly& t, const AlgebraMap& left, const AlgebraMap& right, const PresentationPtr& target) {
  NCPoly out(target);
  const Presentation& tp = *t.presentation();
  for (const auto& [e, c] : t.terms()) {
    NCPoly m1(left.source(), TermMap{{factor_part(tp, e, 0), QScalar(1)}});
    NCPoly m2(right.source(), TermMap{{factor_part(tp, e, 1), QScalar(1)}});
    out += c * (left.apply(m1) * right.apply(m2));
  }
  return out;
}

NCPoly apply_on_leg(const NCPoly& t, std::size_t slot, const AlgebraMap& f) {
  const Presentation& tp = *t.presentation();
  if (tp.factor_count() != 2) throw DomainError("apply_on_leg expects a two-factor element");
  const PresentationPtr other = tp.factors()[1 - slot];
  PresentationPtr T = slot == 0 ? tensor_of({f.target(), other}) : tensor_of({other, f.target()});
  const std::size_t other_slot = slot == 0 ? f.target()->factor_count() : 0;
  const std::size_t f_slot = slot == 0 ? 0 : 1;
  NCPoly out(T);
  for (const auto& [e, c] : t.terms()) {
    NCPoly mine(f.source(), TermMap{{factor_part(tp, e, slot), QScalar(1)}});
    NCPoly rest(other, TermMap{{factor_part(tp, e, 1 - slot), QScalar(1)}});
    out += c * (embed(f.apply(mine), T, f_slot) * embed(rest, T, other_slot));
  }
  return out;
}

AlgebraMap counit_leg_map(const HopfStructure& h, std::size_t slot) {
  const std::size_t n = h.algebra->size();
  AlgebraMap m(h.square, h.algebra);
  for (std::size_t g = 0; g < n; ++g) {
    const int gi = static_cast<int>(g);
    const int kept = static_cast<int>(slot == 0 ? n + g : g);
    const int killed = static_cast<int>(slot == 0 ? g : n + g);
    m.set(kept, NCPoly::gen(h.algebra, gi));
    m.set(killed, NCPoly::scalar(h.algebra, h.counit.image(gi).constant_term()));
    if (h.algebra->invertible(gi)) {
      m.set_inverse(kept, NCPoly::gen(h.algebra, gi, -1));
      m.set_inverse(killed, NCPoly::scalar(h.algebra, h.counit.inverse_image(gi).constant_term()));
    }
  }
  return m;
}

Report verify_hopf(const HopfStructure& h, int degree, int samples, std::uint64_t seed) {
  Report rep("hopf:" + h.algebra->name(), seed);
  const PresentationPtr& A = h.algebra;
  const std::string anchor_axioms = "Hopf algebra structure maps: unit, counit, multiplication, coproduct, antipode";

  auto first = [](const std::optional<std::string>& a, const std::optional<std::string>& b) {
    return a ? a : b;
  };
  {
    auto v = first(h.coproduct.relation_violation(), h.coproduct.inverse_violation());
    rep.add("coproduct preserves relations", !v, anchor_axioms, v.value_or(""));
  }
  {
    auto v = first(h.counit.relation_violation(), h.counit.inverse_violation());
    rep.add("counit preserves relations", !v, anchor_axioms, v.value_or(""));
  }
  {
    auto v = first(h.antipode.relation_violation(), h.antipode.inverse_violation());
    rep.add("antipode is an antihomomorphism", !v, anchor_axioms, v.value_or(""));
  }

  std::mt19937_64 rng(seed);
  std::vector<NCPoly> words;
  std::vector<std::string> labels;
  for (int g = 0; g < static_cast<int>(A->size()); ++g) {
    words.push_back(NCPoly::gen(A, g));
    labels.push_back(A->generator(static_cast<std::size_t>(g)).name);
    if (A->invertible(g)) {
      words.push_back(NCPoly::gen(A, g, -1));
      labels.push_back(A->generator(static_cast<std::size_t>(g)).name + "^-1");
    }
  }
  const std::size_t ngens = words.size();
  for (int s = 0; s < samples; ++s) {
    auto w = random_word(*A, degree, rng, 2);
    words.push_back(engine_word(A, w));
    labels.push_back(word_to_string(*A, w));
  }
  std::vector<NCPoly> basis;
  for (const auto& e : basis_monomials(*A, degree)) basis.emplace_back(A, TermMap{{e, QScalar(1)}});

  const AlgebraMap id = identity_map(A);
  const AlgebraMap left_cop = tensor_map({&h.coproduct, &id});
  const AlgebraMap right_cop = tensor_map({&id, &h.coproduct});
  auto coassoc_failure = [&](const std::vector<NCPoly>& xs, const std::vector<std::string>* names) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      NCPoly d = h.coproduct.apply(xs[i]);
      if (!(left_cop.apply(d) == right_cop.apply(d))) return names ? (*names)[i] : xs[i].to_string();
    }
    return std::string();
  };
  {
    std::string w = coassoc_failure(basis, nullptr);
    rep.add("coassociativity on basis monomials", w.empty(), "coassociativity of the coproduct", w);
    w = coassoc_failure(words, &labels);
    rep.add("coassociativity on generators and random words", w.empty(), "coassociativity of the coproduct", w);
  }

  const AlgebraMap eps_left = counit_leg_map(h, 0);
  const AlgebraMap eps_right = counit_leg_map(h, 1);
  std::string counit_fail;
  std::string antipode_fail;
  const NCPoly one = NCPoly::scalar(A, QScalar(1));
  for (std::size_t i = 0; i < words.size(); ++i) {
    const NCPoly& x = words[i];
    NCPoly d = h.coproduct.apply(x);
    if (counit_fail.empty() && (!(eps_left.apply(d) == x) || !(eps_right.apply(d) == x))) counit_fail = labels[i];
    if (antipode_fail.empty()) {
      const NCPoly expect = h.counit.apply(x).constant_term() * one;
      if (!(multiply_legs(d, h.antipode, id, A) == expect) || !(multiply_legs(d, id, h.antipode, A) == expect))
        antipode_fail = labels[i];
    }
  }
  rep.add("counit law", counit_fail.empty(), "counit axiom (eps (x) id) Delta = id = (id (x) eps) Delta",
          counit_fail);
  rep.add("antipode law", antipode_fail.empty(), "antipode axiom mu (S (x) id) Delta = eta eps", antipode_fail);
  (void)ngens;

  if (!h.star) {
    rep.add_status("star structure", Status::Skipped, "star structure of SU_q(2)",
                   "the ideal generated by b is not star-invariant (b* = -q c), so the star does not descend");
    return rep;
  }
  const AlgebraMap& st = *h.star;
  {
    auto v = st.relation_violation();
    rep.add("star is an antilinear antihomomorphism", !v, "star structure: (ab)* = b* a*", v.value_or(""));
  }
  std::string invol_fail;
  std::string cop_fail;
  std::string eps_fail;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const NCPoly& x = words[i];
    const NCPoly xs = st.apply(x);
    if (invol_fail.empty() && !(st.apply(xs) == x)) invol_fail = labels[i];
    if (cop_fail.empty()) {
      NCPoly lhs = h.coproduct.apply(xs);
      NCPoly rhs = apply_on_leg(apply_on_leg(h.coproduct.apply(x), 0, st), 1, st);
      if (!(lhs == rhs)) cop_fail = labels[i];
    }
    if (eps_fail.empty() && !(h.counit.apply(xs).constant_term() == h.counit.apply(x).constant_term().conj()))
      eps_fail = labels[i];
  }
  rep.add("star is an involution", invol_fail.empty(), "star structure: involution", invol_fail);
  rep.add("coproduct commutes with star", cop_fail.empty(), "Hopf star algebra: Delta(x*) = (* (x) *) Delta(x)",
          cop_fail);
  rep.add("counit commutes with star", eps_fail.empty(), "Hopf star algebra: eps(x*) = conj eps(x)", eps_fail);
  std::string sss_fail;
  for (int g = 0; g < static_cast<int>(A->size()); ++g) {
    const NCPoly x = NCPoly::gen(A, g);
    if (!(st.apply(h.antipode.apply(st.apply(h.antipode.apply(x)))) == x))
      sss_fail = A->generator(static_cast<std::size_t>(g)).name;
  }
  rep.add("star S star S = id on generators", sss_fail.empty(), "Hopf star algebra compatibility", sss_fail);
  return rep;
}

Report verify_projection(int degree) {
  Report rep("projection", 0);
  const AlgebraMap& pi = projection_pi();
  const HopfStructure& g = hopf_G();
  const HopfStructure& b = hopf_borel();
  const std::string anchor = "quotient map pi: G -> B onto the lower Borel subgroup";
  {
    auto v = pi.relation_violation();
    rep.add("pi is an algebra map", !v, anchor, v.value_or(""));
  }
  const AlgebraMap pipi = tensor_map({&pi, &pi});
  std::string cop_fail;
  std::string eps_fail;
  std::string s_fail;
  for (const auto& e : basis_monomials(*algebra_G(), degree)) {
    const NCPoly m(algebra_G(), TermMap{{e, QScalar(1)}});
    const NCPoly pm = pi.apply(m);
    if (cop_fail.empty() && !(pipi.apply(g.coproduct.apply(m)) == b.coproduct.apply(pm))) cop_fail = m.to_string();
    if (eps_fail.empty() && !(b.counit.apply(pm) == g.counit.apply(m))) eps_fail = m.to_string();
    if (s_fail.empty() && !(b.antipode.apply(pm) == pi.apply(g.antipode.apply(m)))) s_fail = m.to_string();
  }
  rep.add("pi intertwines coproducts", cop_fail.empty(), anchor, cop_fail);
  rep.add("pi intertwines counits", eps_fail.empty(), anchor, eps_fail);
  rep.add("pi intertwines antipodes", s_fail.empty(), anchor, s_fail);
  return rep;
}

}  // namespace suq2
