#pragma once

/// Coherent families C_b, C_d for V_n, the resolution of unity and the
/// integrals behind it.

#include <cstdint>
#include <string>
#include <vector>

#include "suq2/charts.hpp"
#include "suq2/comod.hpp"
#include "suq2/report.hpp"

namespace suq2 {

/// Localization element with no negative exponent, read back in G.
NCPoly lift_to_G(const NCPoly& p);

/// rho(y^n) = C (1 (x) gamma(chi)) with chi = lambda^-n, in V_n (x) chart algebra.
struct CoherentFamily {
  ChartId chart = ChartId::D;
  int n = 0;
  std::vector<NCPoly> coeffs;  // coefficient of x^i y^(n-i)
  NCPoly element;              // in Manin (x) chart algebra
  bool coinvariant = false;    // every coefficient is a polynomial in the chart's u
  bool factorizes = false;
};
CoherentFamily solve_coherent(ChartId id, int n);

/// binom(n, i)_{q^-2} q^-C(i,2): the d-chart coefficient of x^i y^(n-i) is this times u^i.
QScalar coherent_coefficient(int n, int i);

/// Pairs (<C_b|v>, <C_d|v>) glue for every basis vector v.
Report section_property_check(int n);

/// gamma(chi) gamma(chi)* computed in G.
NCPoly mu_density(ChartId id, int n);

struct ResolutionResult {
  int n = 0;
  ScalarMatrix matrix;  // A e_m = sum_i matrix[i][m] e_i
  ScalarMatrix integrals;  // h(P_i P_j*) with P_i = C_i gamma(chi) in G
  QScalar alpha;
  bool scalar = false;
  std::string offending;
  bool chart_agreement = false;
};
/// A = h(|C> dmu <C|) from both charts; cached per n.
const ResolutionResult& resolution_operator(int n);

/// h(u^i d^n (u^j d^n)*).
QScalar lemma_integral(int i, int j, int n);
/// binom(n, i)_{q^-2}^-1 q^n q^(2 C(i,2)) / [n+1]_q.
QScalar lemma_closed_form(int i, int n);

/// h(zeta^i (q^-2 zeta; q^-2)_(n-i)).
QScalar qbeta_integral(int i, int n);
/// binom(n, i)_{q^-2} q^n / [n+1]_q.
QScalar qbeta_stated(int i, int n);
/// binom(n, i)_{q^-2}^-1 q^n / [n+1]_q.
QScalar qbeta_inverse_binomial(int i, int n);
Report qbeta_check(int i, int n);

/// Jackson integral of x^(alpha-1) (p x; p)_(beta-1) in base p = q^-2 against
/// Gamma_p(alpha) Gamma_p(beta) / Gamma_p(alpha + beta).
Report ramanujan_qbeta(int alpha, int beta);

/// Which Haar integrand builds the operator A|v> = sum <w_0|v> w_0' h(...).
enum class IntegrandOrder {
  Printed,  // w_(1)* w'_(1)
  Swapped,  // w'_(1) w_(1)*
};
constexpr IntegrandOrder kIntegrandOrder = IntegrandOrder::Swapped;
ScalarMatrix integrand_operator(int n, const std::vector<QScalar>& w, IntegrandOrder order);
SchurResult scalar_operator_general(int n, const std::vector<QScalar>& w, IntegrandOrder order = kIntegrandOrder);

/// alpha^-1 h(H|C> dmu <C|v>).
std::vector<QScalar> reproducing_apply(int n, const ScalarMatrix& H, const std::vector<QScalar>& v);

Report verify_coherent(int nmin, int nmax, int samples, std::uint64_t seed);
Report verify_scalar_operator(int nmax, int samples, std::uint64_t seed);

}  // namespace suq2
