#pragma once

/// Sections of the line bundles L_chi over the two-chart cover, the
/// kappa transforms, cotensor slices and the gluing isomorphism.

#include <cstdint>
#include <string>
#include <vector>

#include "suq2/charts.hpp"
#include "suq2/comod.hpp"
#include "suq2/report.hpp"

namespace suq2 {

/// Finite-dimensional left Borel comodule: lambda(m_k) = sum_j L[j][k] (x) m_j.
struct LeftComodule {
  std::string name;
  PolyMatrix L;  // over Borel
  [[nodiscard]] std::size_t dim() const { return L.size(); }
};

/// Entrywise antipode: turns the matrix of a right coaction m -> m_0 (x) m_1
/// into the left coaction m -> S(m_1) (x) m_0, and a left one into the right
/// coaction m -> m_0 (x) S(m_-1). Index layout is unchanged.
PolyMatrix convert_side(const PolyMatrix& m, const AlgebraMap& antipode);

/// One-dimensional comodule of weight chi: 1 -> chi (x) 1.
LeftComodule character_comodule(const NCPoly& chi);
LeftComodule trivial_comodule();
/// V_n restricted along pi and converted to a left Borel comodule.
LeftComodule vn_left_borel(int n);

/// Element of E (x) M as its components over the basis of M.
using ChartVector = std::vector<NCPoly>;

/// kappa(F)_j = sum_k F_k gamma(L[j][k]).
ChartVector kappa(ChartId id, const LeftComodule& m, const ChartVector& F);
/// kappa_bar(F)_j = sum_k F_k gamma(S_B(L[j][k])).
ChartVector kappa_bar(ChartId id, const LeftComodule& m, const ChartVector& F);

/// rho_B(F_j) = sum_k F_k (x) L[j][k] for all j.
bool in_cotensor(ChartId id, const LeftComodule& m, const ChartVector& F);
/// rho_B(F_j) = F_j (x) 1 for all j.
bool is_coinvariant(ChartId id, const ChartVector& F);
/// Basis of the cotensor subspace with components of degree <= degree.
std::vector<ChartVector> cotensor_subspace(ChartId id, const LeftComodule& m, int degree);

struct CotensorSlice {
  int n = 0;
  int degree = 0;
  std::vector<NCPoly> basis;  // in G
};
/// {g in G : (id (x) pi) Delta(g) = g (x) lambda^-n} on monomials up to the degree.
CotensorSlice cotensor_slice(int n, int degree);

struct Section {
  NCPoly f_b;  // in C[u'] inside G_b
  NCPoly f_d;  // in C[u] inside G_d
};
/// Pairs of polynomials of degree <= degree in u' and u with
/// f_b gamma_b(chi) = f_d gamma_d(chi) in G_bd, chi = lambda^-n.
std::vector<Section> sections_space(int n, int degree);
bool glues(const Section& s, int n);

/// g -> (iota_b(g) gamma_b(chi)^-1, iota_d(g) gamma_d(chi)^-1).
Section glue(const NCPoly& g, int n);

/// Right G-coaction g -> g_(2) (x) S(g_(1)) on the slice as a matrix over G.
PolyMatrix slice_coaction(const CotensorSlice& s);

struct Intertwiner {
  bool found = false;
  bool invertible = false;
  std::size_t solution_dim = 0;
  ScalarMatrix phi;  // Phi(e_j) = sum_i phi[i][j] s_i
};
/// Phi with sum_k phi_ik t_kj = sum_k R_ik phi_kj.
Intertwiner slice_intertwiner(const CotensorSlice& s);

Report glue_iso_check(int n, int degree);

Report verify_bundle(int nmax, int max_degree, int samples, std::uint64_t seed);

}  // namespace suq2
