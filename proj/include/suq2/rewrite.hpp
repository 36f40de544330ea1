#pragma once

/// Independent word-rewriting reducer used to probe the multiplication
/// engine: rules are applied one redex at a time in a random order.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "suq2/algebra_map.hpp"
#include "suq2/ncpoly.hpp"

namespace suq2 {

/// Reduces c * word to normal form, picking a random redex at every step.
TermMap rewrite_word(const Presentation& p, const std::vector<Letter>& word, std::mt19937_64& rng);

/// Random word of total absolute degree in [1, degree]; exponents of
/// invertible generators lie in [-exp_range, exp_range].
std::vector<Letter> random_word(const Presentation& p, int degree, std::mt19937_64& rng, int exp_range = 3);

/// Normal form of a word via the multiplication engine.
NCPoly engine_word(const PresentationPtr& p, const std::vector<Letter>& word);

std::string word_to_string(const Presentation& p, const std::vector<Letter>& word);

struct ConfluenceReport {
  std::size_t samples = 0;
  /// Words whose two randomized reductions disagree.
  std::size_t discrepancies = 0;
  /// Words where the rewriting result differs from the engine.
  std::size_t engine_mismatches = 0;
  /// Output monomials outside the canonical basis.
  std::size_t basis_violations = 0;
  std::vector<std::string> witnesses;
  [[nodiscard]] bool ok() const { return discrepancies == 0 && engine_mismatches == 0 && basis_violations == 0; }
};

ConfluenceReport confluence_probe(const PresentationPtr& p, std::size_t samples, int degree, std::uint64_t seed,
                                  int exp_range = 3);

}  // namespace suq2
