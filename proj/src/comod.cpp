#include "suq2/comod.hpp"

#include <map>
#include <mutex>

#include "suq2/hopf.hpp"

namespace suq2 {

namespace {

const PresentationPtr& manin_G() {
  static const PresentationPtr t = tensor_of({algebra_manin(), algebra_G()});
  return t;
}

NCPoly g_mono(const Exponents& e) { return NCPoly(algebra_G(), TermMap{{e, QScalar(1)}}); }

VnComodule build_vn(int n) {
  if (n < 0) throw DomainError("V_n needs n >= 0");
  VnComodule v;
  v.n = n;
  for (int i = 0; i <= n; ++i) v.basis.push_back(Exponents{i, n - i});
  const auto N = static_cast<std::size_t>(n + 1);
  v.matrix.assign(N, std::vector<NCPoly>(N, NCPoly(algebra_G())));
  const Presentation& t = *manin_G();
  for (std::size_t j = 0; j < N; ++j) {
    const NCPoly r = coaction(v.element(static_cast<int>(j)));
    for (const auto& [e, c] : r.terms()) {
      const Exponents m = factor_part(t, e, 0);
      const auto i = static_cast<std::size_t>(m[kX]);
      v.matrix[i][j] += c * g_mono(factor_part(t, e, 1));
    }
  }
  return v;
}

}  // namespace

NCPoly VnComodule::element(int i) const {
  return NCPoly(algebra_manin(), TermMap{{basis.at(static_cast<std::size_t>(i)), QScalar(1)}});
}

std::vector<QScalar> VnComodule::coordinates(const NCPoly& v) const {
  std::vector<QScalar> out(dim());
  for (const auto& [e, c] : v.terms()) {
    if (total_degree(e) != n) throw DomainError("element is not homogeneous of degree " + std::to_string(n));
    out[static_cast<std::size_t>(e[kX])] = c;
  }
  return out;
}

const VnComodule& vn(int n) {
  static std::mutex mu;
  static std::map<int, VnComodule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_vn(n)).first;
  return it->second;
}

const AlgebraMap& manin_coaction() {
  static const AlgebraMap m = [] {
    const PresentationPtr& t = manin_G();
    auto xt = [&](int mg, int gg) {
      return embed(NCPoly::gen(algebra_manin(), mg), t, 0) * embed(NCPoly::gen(algebra_G(), gg), t, 1);
    };
    AlgebraMap f(algebra_manin(), t);
    f.set(kX, xt(kX, kA) + xt(kY, kC));
    f.set(kY, xt(kX, kB) + xt(kY, kD));
    return f;
  }();
  return m;
}

NCPoly coaction(const NCPoly& v) {
  if (v.presentation()->name() != algebra_manin()->name()) throw DomainError("coaction expects a Manin polynomial");
  return manin_coaction().apply(v);
}

PolyMatrix map_matrix(const PolyMatrix& m, const AlgebraMap& f) {
  PolyMatrix out;
  for (const auto& row : m) {
    std::vector<NCPoly> r;
    for (const auto& x : row) r.push_back(f.apply(x));
    out.push_back(std::move(r));
  }
  return out;
}

Report verify_comodule_axioms(int n) {
  Report rep("comod:V" + std::to_string(n), 0);
  const VnComodule& v = vn(n);
  const PresentationPtr GG = tensor_of({algebra_G(), algebra_G()});
  const std::size_t N = v.dim();
  std::string coassoc;
  std::string counit_fail;
  std::string homog;
  for (std::size_t i = 0; i < N && coassoc.empty(); ++i)
    for (std::size_t j = 0; j < N; ++j) {
      NCPoly rhs(GG);
      for (std::size_t k = 0; k < N; ++k) rhs += embed(v.matrix[i][k], GG, 0) * embed(v.matrix[k][j], GG, 1);
      if (!(coproduct(v.matrix[i][j]) == rhs)) {
        coassoc = "t_" + std::to_string(i) + std::to_string(j);
        break;
      }
    }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (counit_fail.empty() && !(counit(v.matrix[i][j]) == QScalar(i == j ? 1 : 0)))
        counit_fail = "t_" + std::to_string(i) + std::to_string(j);
      for (const auto& [e, c] : v.matrix[i][j].terms())
        if ((total_degree(e) > n || (n - total_degree(e)) % 2 != 0) && homog.empty())
          homog = v.matrix[i][j].to_string();
    }
  const std::string anchor = "Manin plane comodule V_n: rho(x^r y^s) = (x(x)a + y(x)c)^r (x(x)b + y(x)d)^s";
  rep.add("coassociativity n=" + std::to_string(n), coassoc.empty(), anchor, coassoc);
  rep.add("counit n=" + std::to_string(n), counit_fail.empty(), anchor, counit_fail);
  rep.add("entries of degree <= n and parity n=" + std::to_string(n), homog.empty(), anchor, homog);
  return rep;
}

std::vector<std::vector<QScalar>> weight_covectors(int n, const NCPoly& chi) {
  if (chi.presentation()->name() != algebra_borel()->name()) throw DomainError("weight must lie in Borel");
  const VnComodule& v = vn(n);
  const PresentationPtr MB = tensor_of({algebra_manin(), algebra_borel()});
  const AlgebraMap& pi = projection_pi();
  std::vector<NCPoly> images;
  for (std::size_t j = 0; j < v.dim(); ++j) {
    NCPoly img = -(embed(v.element(static_cast<int>(j)), MB, 0) * embed(chi, MB, 1));
    for (std::size_t i = 0; i < v.dim(); ++i)
      img += embed(v.element(static_cast<int>(i)), MB, 0) * embed(pi.apply(v.matrix[i][j]), MB, 1);
    images.push_back(std::move(img));
  }
  return kernel_of_images(images);
}

std::size_t intertwiner_dimension(int n) {
  const VnComodule& v = vn(n);
  const std::size_t N = v.dim();
  LinearSystem sys(N * N);
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j < N; ++j) {
      std::map<Exponents, SparseVec, TermOrder> rows;
      for (std::size_t i = 0; i < N; ++i) {
        for (const auto& [e, c] : v.matrix[i][j].terms()) rows[e][k * N + i] += c;
        for (const auto& [e, c] : v.matrix[k][i].terms()) rows[e][i * N + j] -= c;
      }
      for (auto& [e, row] : rows) sys.add_equation(row);
    }
  return sys.solve().kernel.size();
}

std::string gram_order_name(GramOrder o) { return o == GramOrder::Printed ? "z1 w1*" : "w1* z1"; }

bool GramForm::orthonormal_claim() const {
  if (!solvable || !unique) return false;
  const QScalar t = QScalar::q_pow(-2);
  for (int i = 0; i <= n; ++i)
    if (!(diag[static_cast<std::size_t>(i)] * gauss_binomial(n, i, t)).is_one()) return false;
  return true;
}

namespace {

// Products P[i*N+k][j*N+l] = order-dependent product of t_jl and t_ik*.
std::vector<std::vector<NCPoly>> gram_products(int n, GramOrder order) {
  const VnComodule& v = vn(n);
  const std::size_t N = v.dim();
  PolyMatrix starred = map_matrix(v.matrix, *hopf_G().star);
  std::vector<std::vector<NCPoly>> P(N * N, std::vector<NCPoly>(N * N, NCPoly(algebra_G())));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t l = 0; l < N; ++l)
          P[i * N + k][j * N + l] =
              order == GramOrder::StarFirst ? starred[i][k] * v.matrix[j][l] : v.matrix[j][l] * starred[i][k];
  return P;
}

}  // namespace

GramForm solve_gram_in_order(int n, GramOrder order) {
  const std::size_t N = vn(n).dim();
  const auto P = gram_products(n, order);
  const Exponents one = algebra_G()->zero_exponents();
  LinearSystem sys(N * N);
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t l = 0; l < N; ++l) {
      std::map<Exponents, SparseVec, TermOrder> rows;
      rows[one][k * N + l] -= QScalar(1);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          for (const auto& [e, c] : P[i * N + k][j * N + l].terms()) rows[e][i * N + j] += c;
      for (auto& [e, row] : rows) sys.add_equation(row);
    }
  sys.add_equation(SparseVec{{0, QScalar(1)}}, QScalar(1));
  const auto sol = sys.solve();
  GramForm g;
  g.n = n;
  g.order = order;
  g.solvable = sol.consistent;
  g.unique = sol.consistent && sol.kernel.empty();
  if (!g.solvable) return g;
  g.gram.assign(N, std::vector<QScalar>(N));
  g.off_diagonal_zero = true;
  for (const auto& [idx, c] : sol.particular) {
    g.gram[idx / N][idx % N] = c;
    if (idx / N != idx % N && !c.is_zero()) g.off_diagonal_zero = false;
  }
  for (std::size_t i = 0; i < N; ++i) g.diag.push_back(g.gram[i][i]);
  return g;
}

GramForm solve_coinvariant_gram(int n) {
  GramForm printed = solve_gram_in_order(n, GramOrder::Printed);
  if (printed.orthonormal_claim()) return printed;
  GramForm swapped = solve_gram_in_order(n, GramOrder::StarFirst);
  if (swapped.orthonormal_claim()) return swapped;
  if (!printed.solvable && !swapped.solvable) throw DomainError("no coinvariant inner product on V_" + std::to_string(n));
  return printed.solvable ? printed : swapped;
}

const GramForm& gram(int n) {
  static std::mutex mu;
  static std::map<int, GramForm> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, solve_gram_in_order(n, kGramOrder)).first;
  return it->second;
}

std::optional<std::string> gram_violation(const GramForm& g) {
  if (!g.solvable) return "no solution";
  const std::size_t N = vn(g.n).dim();
  const auto P = gram_products(g.n, g.order);
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t l = 0; l < N; ++l) {
      NCPoly s = -NCPoly::scalar(algebra_G(), g.gram[k][l]);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) s += g.gram[i][j] * P[i * N + k][j * N + l];
      if (!s.is_zero()) return "(" + std::to_string(k) + "," + std::to_string(l) + "): residue " + s.to_string();
    }
  return std::nullopt;
}

NCPoly pairing(const NCPoly& F, const NCPoly& v, const GramForm& g) {
  const Presentation& t = *F.presentation();
  if (t.factor_count() != 2 || t.factors()[0]->name() != algebra_manin()->name())
    throw DomainError("pairing expects an element of Manin (x) A");
  const PresentationPtr& A = t.factors()[1];
  const VnComodule& V = vn(g.n);
  const std::vector<QScalar> coords = V.coordinates(v);
  NCPoly out(A);
  for (const auto& [e, c] : F.terms()) {
    const Exponents m = factor_part(t, e, 0);
    if (total_degree(m) != g.n) throw DomainError("pairing: vector slot not in V_" + std::to_string(g.n));
    const auto k = static_cast<std::size_t>(m[kX]);
    QScalar s;
    for (std::size_t l = 0; l < V.dim(); ++l) s += g.gram[k][l] * coords[l];
    if (!s.is_zero()) out += (c.conj() * s) * NCPoly(A, TermMap{{factor_part(t, e, 1), QScalar(1)}});
  }
  return out;
}

SchurResult schur_scalar(const ScalarMatrix& a) {
  SchurResult r;
  if (a.empty()) return r;
  r.alpha = a[0][0];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) {
      r.offending = "row " + std::to_string(i) + " has wrong length";
      return r;
    }
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == (i == j ? r.alpha : QScalar()))) {
        r.offending = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return r;
      }
  }
  r.scalar = true;
  return r;
}

Report verify_comod(int nmax) {
  Report rep("comod", 0);
  {
    auto v = manin_coaction().relation_violation();
    rep.add("coaction is an algebra map", !v, "Manin plane coaction x -> x(x)a + y(x)c, y -> x(x)b + y(x)d",
            v.value_or(""));
  }
  const QRational half(1, 2);
  const std::string wanchor = "weight covector: (id (x) pi) rho v = v (x) chi";
  const std::string ganchor = "coinvariant inner product and orthonormal basis sqrt(binom) x^i y^(n-i)";
  for (int n = 0; n <= nmax; ++n) {
    const std::string sfx = " n=" + std::to_string(n);
    rep.merge(verify_comodule_axioms(n), "");
    const NCPoly chi = NCPoly::gen(algebra_borel(), kLambda, -n);
    const auto w = weight_covectors(n, chi);
    bool ok = w.size() == 1;
    if (ok)
      for (std::size_t i = 1; i < w[0].size(); ++i) ok = ok && w[0][i].is_zero();
    rep.add("weight covectors of lambda^-n are y^n" + sfx, ok, wanchor,
            "dimension " + std::to_string(w.size()));
    if (n <= 3) {
      const std::size_t d = intertwiner_dimension(n);
      rep.add("only scalar self-intertwiners" + sfx, d == 1, "simple comodule hypothesis of the Schur lemma",
              "dimension " + std::to_string(d));
    }
    if (n <= 4) {
      const GramForm chosen = solve_coinvariant_gram(n);
      const GramForm printed = solve_gram_in_order(n, GramOrder::Printed);
      auto viol = gram_violation(chosen);
      rep.add("gram coinvariance" + sfx, chosen.unique && !viol, ganchor, viol.value_or(""));
      rep.add("gram off-diagonal forced to zero" + sfx, chosen.off_diagonal_zero, ganchor);
      rep.add("gram orthonormality claim holds in w1* z1 order" + sfx, gram(n).orthonormal_claim(), ganchor,
              "discovered order " + gram_order_name(chosen.order));
      rep.add("printed order z1 w1* breaks orthonormality" + sfx, n == 0 || !printed.orthonormal_claim(), ganchor);
      bool pos = chosen.solvable;
      for (const auto& g : chosen.diag) pos = pos && specialize(g, half) > 0;
      rep.add("gram diagonal positive at q=1/2" + sfx, pos, ganchor);
    }
  }
  {
    const auto w = weight_covectors(2, NCPoly::gen(algebra_borel(), kLambda, -1));
    rep.add("no weight covectors of lambda^-1 in V_2", w.empty(), wanchor);
  }
  {
    const SchurResult good = schur_scalar({{QScalar::q(), QScalar()}, {QScalar(), QScalar::q()}});
    const SchurResult bad = schur_scalar({{QScalar(1), QScalar()}, {QScalar(), QScalar::q()}});
    rep.add("schur scalar detects alpha * Id", good.scalar && good.alpha == QScalar::q() && !bad.scalar &&
                                                   bad.offending == "(1,1)",
            "Schur lemma: A = alpha id_V");
  }
  return rep;
}

}  // namespace suq2
