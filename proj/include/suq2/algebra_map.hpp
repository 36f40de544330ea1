#pragma once

/// Generator assignments extended to (anti)homomorphisms between
/// presentations, and the defining relations used to check them.

#include <optional>
#include <string>
#include <vector>

#include "suq2/ncpoly.hpp"

namespace suq2 {

/// A letter of a formal word: generator index and exponent.
struct Letter {
  int gen = 0;
  int exp = 1;
};

/// A defining relation lhs-word = rhs (as raw terms in the source).
struct Relation {
  std::string label;
  std::vector<Letter> lhs;
  std::vector<RawTerm> rhs;
};

/// All defining relations: q-commutations, special pair rules, elimination
/// rules and g g^-1 = g^-1 g = 1 for invertible generators.
std::vector<Relation> defining_relations(const Presentation& p);

std::string relation_to_string(const Presentation& p, const Relation& r);

class AlgebraMap {
 public:
  AlgebraMap() = default;
  AlgebraMap(PresentationPtr source, PresentationPtr target, bool anti = false, bool antilinear = false);

  void set(int gen, NCPoly image);
  /// Image of g^-1 for invertible g.
  void set_inverse(int gen, NCPoly image);

  [[nodiscard]] const PresentationPtr& source() const { return source_; }
  [[nodiscard]] const PresentationPtr& target() const { return target_; }
  [[nodiscard]] bool anti() const { return anti_; }
  [[nodiscard]] const NCPoly& image(int gen) const;
  [[nodiscard]] const NCPoly& inverse_image(int gen) const;
  [[nodiscard]] bool defined(int gen) const;

  /// Image of g^e (negative e uses the inverse image).
  [[nodiscard]] NCPoly power(int gen, int e) const;
  /// Image of a formal word.
  [[nodiscard]] NCPoly apply_word(const std::vector<Letter>& w, const QScalar& c = QScalar(1)) const;
  [[nodiscard]] NCPoly apply(const NCPoly& p) const;

  /// First relation of the source violated under the extension, if any.
  /// Anti maps are checked with reversed words.
  [[nodiscard]] std::optional<std::string> relation_violation() const;
  /// Checks image(g) * inverse_image(g) = 1 in both orders.
  [[nodiscard]] std::optional<std::string> inverse_violation() const;

 private:
  PresentationPtr source_;
  PresentationPtr target_;
  bool anti_ = false;
  bool antilinear_ = false;
  std::vector<std::optional<NCPoly>> images_;
  std::vector<std::optional<NCPoly>> inverse_images_;
};

/// Letters of a monomial in index order.
std::vector<Letter> monomial_letters(const Exponents& e);

/// f1 (x) f2 ... as a map between tensor presentations.
AlgebraMap tensor_map(const std::vector<const AlgebraMap*>& maps);

/// Identity map of a presentation.
AlgebraMap identity_map(const PresentationPtr& p);

/// Inclusion of one G-family algebra into a larger one (same generator
/// indices), e.g. G -> G_d or G_b -> G_bd.
AlgebraMap inclusion_map(const PresentationPtr& from, const PresentationPtr& to);

}  // namespace suq2
