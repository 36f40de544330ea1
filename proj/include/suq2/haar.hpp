#pragma once

/// The Haar state of SU_q(2) on G.

#include <cstdint>

#include "suq2/ncpoly.hpp"
#include "suq2/report.hpp"

namespace suq2 {

/// integral of zeta^r with zeta = -q b c: (1 - q^-2) / (1 - q^(-2(r+1))).
QScalar zeta_integral(int r);

/// Linear functional on G: zero off (b c)^r, and
/// integral (b c)^r = (-q^-1)^r integral zeta^r.
QScalar haar(const NCPoly& p);

/// zeta^k as an element of G.
NCPoly zeta_power(int k);

/// Evaluates a polynomial in zeta as an element of G.
NCPoly zeta_polynomial(const ScalarPoly& f);

/// (id (x) h) Delta(m) = h(m) 1 and (h (x) id) Delta(m) = h(m) 1 on all
/// basis monomials up to the degree.
Report verify_invariance(int degree);

/// h(f f*) > 0 at q0 for random nonzero f.
Report verify_positivity(const QRational& q0, int samples, int degree, std::uint64_t seed);

/// Invariance, positivity, star symmetry and the zeta moment checks.
Report verify_haar(int degree, int samples, const QRational& q0, std::uint64_t seed);

}  // namespace suq2
