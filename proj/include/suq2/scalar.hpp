#pragma once

/// Exact arithmetic in the field Q(q) of rational functions in the
/// deformation parameter q, plus the q-special functions built on it.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace suq2 {

/// Exact rational number; the specialization target for q.
using QRational = mpq_class;

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense polynomial in q with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the top coefficient is
/// nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long value);  // NOLINT(google-explicit-constructor)
  explicit IntPoly(mpz_class value);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  /// c * q^k
  static IntPoly monomial(mpz_class c, std::size_t k);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  [[nodiscard]] std::size_t order() const;
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] bool is_monomial() const;
  [[nodiscard]] const mpz_class& lead() const { return coeffs_.back(); }
  [[nodiscard]] const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  [[nodiscard]] mpz_class coeff(std::size_t k) const;
  [[nodiscard]] mpz_class content() const;

  [[nodiscard]] IntPoly shifted_down(std::size_t k) const;
  [[nodiscard]] IntPoly shifted_up(std::size_t k) const;
  [[nodiscard]] IntPoly scaled(const mpz_class& c) const;
  /// Exact division by an integer dividing every coefficient.
  [[nodiscard]] IntPoly divided(const mpz_class& c) const;
  [[nodiscard]] QRational evaluate(const QRational& at) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Exact quotient; throws if `divisor` does not divide `*this` over Z.
  [[nodiscard]] IntPoly exact_div(const IntPoly& divisor) const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Greatest common divisor in Z[q], normalized to a positive leading
/// coefficient (gcd(0, 0) = 0).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// An element of Q(q), stored as a reduced fraction of integer polynomials.
///
/// Invariants: the denominator is nonzero with positive leading coefficient,
/// numerator and denominator share no polynomial factor and no common integer
/// content. Zero is 0/1. Equality is therefore structural.
class QScalar {
 public:
  QScalar() : num_(0), den_(1) {}
  QScalar(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QScalar(const QRational& value);
  QScalar(IntPoly num, IntPoly den);

  /// The generator q.
  static QScalar q();
  /// q^k for any integer k.
  static QScalar q_pow(long k);

  [[nodiscard]] const IntPoly& num() const { return num_; }
  [[nodiscard]] const IntPoly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const;
  /// True when the value is c * q^k for a rational c.
  [[nodiscard]] bool is_monomial() const;
  /// True when the value lies in Q (no q-dependence).
  [[nodiscard]] bool is_rational() const;
  /// The rational value of a constant; throws for non-constants.
  [[nodiscard]] QRational rational_value() const;

  /// Complex conjugation; q is real and coefficients are rational.
  [[nodiscard]] QScalar conj() const { return *this; }
  [[nodiscard]] QScalar inverse() const;
  [[nodiscard]] QScalar pow(long k) const;
  /// Size measure used for pivot selection in elimination.
  [[nodiscard]] std::size_t complexity() const;

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  QScalar operator-() const;

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  friend bool operator==(const QScalar& a, const QScalar& b) = default;

  /// Canonical text: Laurent form when the denominator is a power of q,
  /// otherwise `num/(den)`. `parse_scalar(to_string())` recovers the value.
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();
  IntPoly num_;
  IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const QScalar& s);

/// Exact value at q = q0; throws DomainError at a pole.
QRational specialize(const QScalar& a, const QRational& q0);

/// Parses the scalar grammar: integers, `q`, `^` (negative exponents allowed),
/// `+ - * /`, parentheses, and juxtaposition.
QScalar parse_scalar(std::string_view text);

/// Parses `p/r` or an integer into an exact rational.
QRational parse_rational(std::string_view text);
std::string rational_to_string(const QRational& r);

// ---------------------------------------------------------------------------
// q-special functions

/// Symmetric q-integer [n]_q = (q^n - q^-n)/(q - q^-1).
QScalar q_number(long n);
/// [n]_q! with the symmetric convention.
QScalar q_factorial(long n);

/// Base-t integer (1 - t^n)/(1 - t) = 1 + t + ... + t^(n-1).
QScalar base_number(long n, const QScalar& t);
QScalar base_factorial(long n, const QScalar& t);

/// Gaussian binomial in base t: prod_{j=1..k} (1 - t^(n-k+j)) / (1 - t^j).
QScalar gauss_binomial(long n, long k, const QScalar& t);

/// q-Gamma at a positive integer argument in base t: Gamma_t(m) = [m-1]_t!.
QScalar q_gamma_int(long m, const QScalar& t);

/// Polynomial in one marker variable with Q(q) coefficients.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(std::vector<QScalar> coeffs);
  static ScalarPoly constant(const QScalar& c);
  /// c * x^k
  static ScalarPoly monomial(const QScalar& c, std::size_t k);

  [[nodiscard]] const std::vector<QScalar>& coeffs() const { return coeffs_; }
  [[nodiscard]] QScalar coeff(std::size_t k) const;
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) = default;

 private:
  void trim();
  std::vector<QScalar> coeffs_;
};

/// (a x; t)_k = prod_{j=0}^{k-1} (1 - a t^j x), as a polynomial in x.
ScalarPoly q_pochhammer(const QScalar& a, const QScalar& t, long k);

/// Jackson integral over [0,1] in base p, using the exact monomial value
/// (1 - p)/(1 - p^(m+1)) for x^m.
QScalar jackson_integral_01(const ScalarPoly& f, const QScalar& p);

}  // namespace suq2
