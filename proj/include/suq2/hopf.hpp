#pragma once

/// Hopf structure on G = O(SL_q(2)) and on its Borel quotient.

#include <cstdint>
#include <optional>

#include "suq2/algebra_map.hpp"
#include "suq2/ncpoly.hpp"
#include "suq2/report.hpp"

namespace suq2 {

struct HopfStructure {
  PresentationPtr algebra;
  PresentationPtr square;   // algebra (x) algebra
  AlgebraMap coproduct;     // algebra -> square
  AlgebraMap counit;        // algebra -> scalars
  AlgebraMap antipode;      // antihomomorphism
  std::optional<AlgebraMap> star;  // antilinear antihomomorphism
};

/// Matrix coproduct Delta(T) = T (x) T, counit from the identity matrix,
/// antipode solved from the convolution identity, and the SU_q(2) star.
const HopfStructure& hopf_G();
/// Structure transported along the quotient map pi.
const HopfStructure& hopf_borel();
/// G with Delta(b) replaced by a (x) b + d (x) b; used as a negative control.
HopfStructure corrupted_hopf_G();

/// pi: a -> lambda, b -> 0, c -> xi, d -> lambda^-1.
const AlgebraMap& projection_pi();

struct AntipodeSolution {
  AlgebraMap antipode;
  bool unique = false;
};
/// Solves sum_k S(t_ik) t_kj = delta_ij = sum_k t_ik S(t_kj) for S(t_ij) in
/// the span of the generators.
AntipodeSolution solve_antipode_G();

/// Structure maps on elements; G-family elements with negative exponents
/// are rejected where the map only exists on G.
NCPoly coproduct(const NCPoly& p);
QScalar counit(const NCPoly& p);
NCPoly antipode(const NCPoly& p);
/// Star on G. Elements of a localization are accepted when no exponent is
/// negative (they are then images of G basis monomials).
NCPoly star(const NCPoly& p);

/// Delta(p) = p (x) p and epsilon(p) = 1.
bool is_group_like(const NCPoly& p);

/// sum c * f(m1) * g(m2) over the terms c (m1 (x) m2) of a two-factor element.
NCPoly multiply_legs(const NCPoly& t, const AlgebraMap& left, const AlgebraMap& right, const PresentationPtr& target);

/// Applies an operation on one leg of a two-factor element, keeping the other.
NCPoly apply_on_leg(const NCPoly& t, std::size_t slot, const AlgebraMap& f);

/// The counit as a map algebra (x) algebra -> algebra on one leg.
AlgebraMap counit_leg_map(const HopfStructure& h, std::size_t slot);

Report verify_hopf(const HopfStructure& h, int degree, int samples, std::uint64_t seed);

/// (pi (x) pi) Delta = Delta_B pi, eps_B pi = eps, S_B pi = pi S on basis
/// monomials of G up to the degree.
Report verify_projection(int degree);

}  // namespace suq2
