#pragma once

/// Noncommutative polynomials in ordered-monomial normal form over Q(q).
///
/// A presentation fixes an ordered generator list. Generators q-commute
/// pairwise (g_j g_i = q^E g_i g_j for i < j) except for designated special
/// pairs, which carry an inhomogeneous swap rule and optionally a rule that
/// removes their co-occurrence. Generators can be eliminated outright by a
/// replacement rule. Invertible generators carry integer exponents.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "suq2/scalar.hpp"

namespace suq2 {

using Exponents = std::vector<int>;

/// Sum of absolute exponents.
int total_degree(const Exponents& e);

/// Ascending total degree, then descending lexicographic exponent vector.
struct TermOrder {
  bool operator()(const Exponents& x, const Exponents& y) const;
};

using TermMap = std::map<Exponents, QScalar, TermOrder>;

struct RawTerm {
  QScalar coeff;
  Exponents exps;
};

struct PairRule {
  int lo = 0;
  int hi = 0;
  /// Value of hi * lo.
  std::vector<RawTerm> swap_rhs;
  /// Value of lo * hi; empty when lo and hi may co-occur.
  std::vector<RawTerm> cooccur_rhs;
};

struct GeneratorInfo {
  std::string name;
  bool invertible = false;
};

struct ExpHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

class Presentation {
 public:
  Presentation(std::string name, std::vector<GeneratorInfo> gens);

  // Construction (before the presentation is shared).
  void set_skew(int i, int j, int exponent);
  void add_pair_rule(PairRule rule);
  void add_elimination(int gen, std::vector<RawTerm> rhs);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t size() const { return gens_.size(); }
  [[nodiscard]] const std::vector<GeneratorInfo>& generators() const { return gens_; }
  [[nodiscard]] const GeneratorInfo& generator(std::size_t i) const { return gens_[i]; }
  [[nodiscard]] bool invertible(int g) const { return gens_[static_cast<std::size_t>(g)].invertible; }
  [[nodiscard]] bool eliminated(int g) const;
  [[nodiscard]] const std::vector<RawTerm>* elimination(int g) const;
  /// Skew exponent E for i < j: g_j g_i = q^E g_i g_j.
  [[nodiscard]] int skew(int i, int j) const;
  [[nodiscard]] const PairRule* pair_rule(int lo, int hi) const;
  [[nodiscard]] const std::vector<PairRule>& pair_rules() const { return pair_rules_; }
  [[nodiscard]] const std::map<int, std::vector<RawTerm>>& eliminations() const { return eliminations_; }

  /// Index of a generator by name; only meaningful for single-factor algebras.
  [[nodiscard]] std::optional<int> index_of(std::string_view name) const;

  /// Tensor structure: offsets of each factor's generators (one entry for a
  /// plain algebra).
  [[nodiscard]] const std::vector<std::size_t>& factor_offsets() const { return offsets_; }
  [[nodiscard]] const std::vector<PresentationPtr>& factors() const { return factors_; }
  [[nodiscard]] std::size_t factor_count() const { return offsets_.size(); }

  [[nodiscard]] Exponents zero_exponents() const { return Exponents(gens_.size(), 0); }
  /// True when the monomial is stored as is: valid exponent signs, no
  /// eliminated generator, no forbidden co-occurrence.
  [[nodiscard]] bool is_canonical(const Exponents& e) const;

  /// m * g^e for a canonical monomial m, in normal form (memoized).
  [[nodiscard]] TermMap mul_mono_gen(const Exponents& m, int g, int e) const;
  /// terms * monomial-word given by exponents, applied generator by generator.
  [[nodiscard]] TermMap mul_terms_mono(const TermMap& terms, const Exponents& word) const;
  [[nodiscard]] TermMap mul_terms(const TermMap& left, const TermMap& right) const;

  static PresentationPtr tensor(const std::vector<PresentationPtr>& factors);

 private:
  [[nodiscard]] TermMap compute_mul(const Exponents& m, int g, int e) const;
  [[nodiscard]] TermMap reduce_cooccurrence(const Exponents& r, const QScalar& coeff) const;
  [[nodiscard]] TermMap mul_terms_gen(const TermMap& terms, int g, int e) const;
  [[nodiscard]] TermMap mul_terms_raw(const TermMap& terms, const std::vector<RawTerm>& rhs) const;

  std::string name_;
  std::vector<GeneratorInfo> gens_;
  std::vector<int> skew_;
  std::vector<PairRule> pair_rules_;
  std::map<int, std::vector<RawTerm>> eliminations_;
  std::vector<std::size_t> offsets_{0};
  std::vector<PresentationPtr> factors_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Exponents, TermMap, ExpHash> cache_;
};

/// Element of the algebra of a presentation, in canonical form.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(PresentationPtr p) : pres_(std::move(p)) {}
  NCPoly(PresentationPtr p, TermMap terms);

  static NCPoly scalar(PresentationPtr p, const QScalar& c);
  /// Normal form of the word c * prod_i g_i^{e_i} (in index order).
  static NCPoly word(PresentationPtr p, const Exponents& e, const QScalar& c = QScalar(1));
  /// Normal form of the single generator power g^e.
  static NCPoly gen(PresentationPtr p, int g, int e = 1);
  static NCPoly gen(PresentationPtr p, std::string_view name, int e = 1);

  [[nodiscard]] const PresentationPtr& presentation() const { return pres_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_scalar() const;
  /// Coefficient of the empty monomial.
  [[nodiscard]] QScalar constant_term() const;
  [[nodiscard]] QScalar coeff(const Exponents& e) const;
  /// Maximum total absolute exponent; min int for zero.
  [[nodiscard]] int filtration_degree() const;
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const QScalar& c);
  NCPoly operator-() const;
  [[nodiscard]] NCPoly pow(int k) const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const QScalar& c) { return a *= c; }
  friend NCPoly operator*(const QScalar& c, NCPoly a) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b);

  [[nodiscard]] std::string to_string() const;

 private:
  void require_same(const NCPoly& o) const;
  PresentationPtr pres_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const NCPoly& p);

/// Prints one canonical monomial (factor parts joined by " (x) ").
std::string monomial_to_string(const Presentation& p, const Exponents& e);

/// Parses an expression over a single-factor presentation and returns its
/// normal form. Grammar: scalars, generator names, `^` with signed integer
/// exponents, `+ - * /`, parentheses, juxtaposition. Division only by scalars.
NCPoly parse_poly(const PresentationPtr& p, std::string_view text);

// ---------------------------------------------------------------------------
// Standard algebras. Generator order: a < b < c < d, lambda < xi, x < y.

const PresentationPtr& algebra_G();
const PresentationPtr& algebra_G_b();
const PresentationPtr& algebra_G_d();
const PresentationPtr& algebra_G_bd();
const PresentationPtr& algebra_borel();
const PresentationPtr& algebra_manin();
/// The ground field as a presentation with no generators.
const PresentationPtr& algebra_scalars();
/// Lookup by name: G, G_b, G_d, G_bd, Borel, Manin.
PresentationPtr algebra_by_name(std::string_view name);

enum GIndex : int { kA = 0, kB = 1, kC = 2, kD = 3 };
enum BorelIndex : int { kLambda = 0, kXi = 1 };
enum ManinIndex : int { kX = 0, kY = 1 };

/// The tensor presentation of the given factors (flattened, cached).
PresentationPtr tensor_of(const std::vector<PresentationPtr>& factors);

/// Places p into factor `slot` of the tensor presentation t.
NCPoly embed(const NCPoly& p, const PresentationPtr& t, std::size_t slot);
/// Monomial of factor `slot` extracted from a tensor monomial.
Exponents factor_part(const Presentation& t, const Exponents& e, std::size_t slot);
/// Tensor monomial assembled from factor monomials.
Exponents join_parts(const Presentation& t, const std::vector<Exponents>& parts);

/// Basis monomials of a single-factor algebra with total degree <= degree
/// (exponents of invertible generators range over negative values too).
std::vector<Exponents> basis_monomials(const Presentation& p, int degree);

/// Inverse of c * monomial when every generator in it is invertible.
NCPoly invert_monomial(const NCPoly& p);

}  // namespace suq2
