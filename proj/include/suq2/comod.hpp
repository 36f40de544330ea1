#pragma once

/// The Manin-plane comodules V_n over G and their inner products.

#include <optional>
#include <string>
#include <vector>

#include "suq2/algebra_map.hpp"
#include "suq2/linalg.hpp"
#include "suq2/ncpoly.hpp"
#include "suq2/report.hpp"

namespace suq2 {

/// Matrix over an algebra, row-major.
using PolyMatrix = std::vector<std::vector<NCPoly>>;

/// V_n with basis e_i = x^i y^(n-i) and rho(e_j) = sum_i e_i (x) t_ij.
struct VnComodule {
  int n = 0;
  std::vector<Exponents> basis;  // Manin exponents of e_0..e_n
  PolyMatrix matrix;             // t_ij over G
  /// Basis vector e_i as a Manin polynomial.
  [[nodiscard]] NCPoly element(int i) const;
  /// Coordinates of a degree-n Manin polynomial.
  [[nodiscard]] std::vector<QScalar> coordinates(const NCPoly& v) const;
  [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

/// Cached V_n.
const VnComodule& vn(int n);

/// x -> x (x) a + y (x) c, y -> x (x) b + y (x) d as an algebra map Manin -> Manin (x) G.
const AlgebraMap& manin_coaction();
/// Coaction of a Manin polynomial.
NCPoly coaction(const NCPoly& v);

/// (rho (x) id) rho = (id (x) Delta) rho and (id (x) eps) rho = id, entrywise.
Report verify_comodule_axioms(int n);

/// Entrywise image of a matrix under an algebra map.
PolyMatrix map_matrix(const PolyMatrix& m, const AlgebraMap& f);

/// Basis of {v in V_n : (id (x) pi) rho(v) = v (x) chi}, as coordinate vectors.
std::vector<std::vector<QScalar>> weight_covectors(int n, const NCPoly& chi);

/// Dimension of the space of scalar matrices Phi with Phi T = T Phi.
std::size_t intertwiner_dimension(int n);

/// Which product of z_(1) and w*_(1) appears in the coinvariance identity.
enum class GramOrder {
  Printed,    // z_(1) w*_(1)
  StarFirst,  // w*_(1) z_(1)
};
std::string gram_order_name(GramOrder o);

struct GramForm {
  int n = 0;
  GramOrder order = GramOrder::StarFirst;
  bool solvable = false;
  bool unique = false;
  bool off_diagonal_zero = false;
  /// Full Gram matrix G_kl = <e_k|e_l>, normalized by <y^n|y^n> = 1.
  ScalarMatrix gram;
  std::vector<QScalar> diag;
  /// g_i * binom(n, i)_{q^-2} == 1 for all i.
  [[nodiscard]] bool orthonormal_claim() const;
};

/// Solves the coinvariance identity in the given order over all (n+1)^2 entries.
GramForm solve_gram_in_order(int n, GramOrder order);
/// Tries the printed order first, then the other one; returns the first
/// order whose solution satisfies the orthonormality claim, else the printed one.
GramForm solve_coinvariant_gram(int n);
/// The order adopted by the rest of the library.
constexpr GramOrder kGramOrder = GramOrder::StarFirst;
/// Cached Gram in kGramOrder.
const GramForm& gram(int n);

/// Checks <e_k|e_l> 1 = sum <e_i|e_j> (product of t_jl and t_ik*) for all k,l.
std::optional<std::string> gram_violation(const GramForm& g);

/// <F|v> for F in Manin (x) A and v in V_n; antilinear in F.
NCPoly pairing(const NCPoly& F, const NCPoly& v, const GramForm& g);

struct SchurResult {
  bool scalar = false;
  QScalar alpha;
  std::string offending;  // "(i,j)" of the first entry that breaks alpha * Id
};
SchurResult schur_scalar(const ScalarMatrix& a);

Report verify_comod(int nmax);

}  // namespace suq2
