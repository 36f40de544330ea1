#pragma once

/// The two Ore-localization charts G_b and G_d, their Borel coactions,
/// Gauss decompositions, trivializations gamma, and the cover check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suq2/algebra_map.hpp"
#include "suq2/comod.hpp"
#include "suq2/ncpoly.hpp"
#include "suq2/report.hpp"

namespace suq2 {

enum class ChartId { B, D };
std::string chart_name(ChartId id);

/// T = w U A with U upper unitriangular and A lower triangular.
struct GaussDecomposition {
  bool swap = false;  // w is the transposition
  NCPoly U12;
  NCPoly A11, A21, A22;
};

struct GammaSolution {
  bool consistent = false;
  bool unique = false;
  AlgebraMap gamma;  // Borel -> chart algebra
  QScalar beta;      // gamma(lambda^-1) = beta * A22
  QScalar delta;     // gamma(xi) = delta * A21
};

struct Chart {
  ChartId id = ChartId::D;
  PresentationPtr algebra;  // G_b or G_d
  int inverted = kD;
  AlgebraMap iota;          // G -> algebra
  AlgebraMap coaction_B;    // algebra -> algebra (x) Borel
  GaussDecomposition gauss;
  GammaSolution gamma;
  NCPoly coinvariant_generator;  // d b^-1 on G_b, b d^-1 on G_d
  [[nodiscard]] std::string name() const { return chart_name(id); }
  [[nodiscard]] PresentationPtr square() const;  // algebra (x) Borel
};

const Chart& chart(ChartId id);

/// rho_B = (id (x) pi) Delta on G, extended to the inverted generator by
/// inverting its group-like image.
AlgebraMap extend_coaction(ChartId id);

GaussDecomposition gauss_decompose(ChartId id);
/// wUA - T entrywise; empty when the decomposition is exact.
std::optional<std::string> gauss_residual(const GaussDecomposition& g, const PresentationPtr& algebra);

/// Solves gamma(lambda^-1) = beta A22, gamma(xi) = delta A21 with
/// gamma(lambda) = A11 from the algebra-map and comodule-map constraints.
/// A forced value of beta adds the equation beta = forced.
GammaSolution build_gamma(ChartId id, const std::optional<QScalar>& forced_beta = std::nullopt);

struct CoinvariantSlice {
  std::vector<NCPoly> kernel;      // basis of the localized coinvariants
  std::vector<NCPoly> generator_powers;  // 1, u, ..., u^(degree/2)
  bool polynomial_in_generator = false;
};
CoinvariantSlice localized_coinvariants(ChartId id, int degree);

/// gamma(chi) for chi in Borel.
NCPoly gamma_of(ChartId id, const NCPoly& chi);

Report verify_chart(ChartId id, int samples, std::uint64_t seed);

struct EqualizerResult {
  std::size_t g_monomials = 0;
  std::size_t kernel_dim = 0;
  bool injective = false;
  bool all_from_G = false;
  std::string witness;
  [[nodiscard]] bool ok() const { return injective && all_from_G && kernel_dim == g_monomials; }
};
/// Pairs (f_b, f_d) from the degree slices with j_b(f_b) = j_d(f_d) in G_bd
/// are exactly the images of G.
EqualizerResult cover_equalizer(int degree);

/// Generator images of both charts in canonical grammar.
std::string chart_dump();

Report verify_charts(int max_degree, int samples, std::uint64_t seed);

}  // namespace suq2
