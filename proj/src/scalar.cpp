#include "suq2/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

namespace suq2 {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(long value) {
  if (value != 0) coeffs_.emplace_back(value);
}

IntPoly::IntPoly(mpz_class value) {
  if (value != 0) coeffs_.push_back(std::move(value));
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(mpz_class c, std::size_t k) {
  if (c == 0) return {};
  std::vector<mpz_class> v(k + 1);
  v[k] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

bool IntPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  return order() + 1 == coeffs_.size();
}

mpz_class IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  IntPoly r;
  if (k < coeffs_.size()) r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return r;
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  IntPoly r;
  r.coeffs_.assign(k, mpz_class(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPoly IntPoly::divided(const mpz_class& c) const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

QRational IntPoly::evaluate(const QRational& at) const {
  QRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + QRational(*it);
  }
  acc.canonicalize();
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  r.trim();
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return {};
  if (divisor.is_constant()) return divided(divisor.lead());
  std::vector<mpz_class> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() - 1 < dd) throw DomainError("inexact polynomial division");
  std::vector<mpz_class> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), divisor.lead().get_mpz_t()))
      throw DomainError("inexact polynomial division");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), rem[k].get_mpz_t(), divisor.lead().get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) {
      mpz_submul(rem[k - dd + j].get_mpz_t(), c.get_mpz_t(), divisor.coeffs_[j].get_mpz_t());
    }
    quot[k - dd] = std::move(c);
  }
  for (std::size_t k = 0; k < dd; ++k)
    if (rem[k] != 0) throw DomainError("inexact polynomial division");
  return IntPoly(std::move(quot));
}

namespace {

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly r = p.divided(p.content());
  return r.lead() < 0 ? -r : r;
}

// lc(b)^k * a mod b for a suitable k; valid as a gcd step after taking
// primitive parts.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const std::size_t shift = static_cast<std::size_t>(a.degree() - db);
    mpz_class la = a.lead();
    mpz_class lb = b.lead();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    la /= g;
    lb /= g;
    a = a.scaled(lb) - IntPoly::monomial(la, shift) * b;
  }
  return a;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.lead() < 0 ? -b : b;
  if (b.is_zero()) return a.lead() < 0 ? -a : a;
  mpz_class c;
  {
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  const std::size_t qpow = std::min(a.order(), b.order());
  IntPoly x = primitive_part(a.shifted_down(a.order()));
  IntPoly y = primitive_part(b.shifted_down(b.order()));
  IntPoly g;
  if (x.is_constant() || y.is_constant()) {
    g = IntPoly(1);
  } else if (x == y) {
    g = x;
  } else {
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
      IntPoly r = pseudo_remainder(x, y);
      x = std::move(y);
      y = primitive_part(r);
    }
    g = primitive_part(x);
  }
  return g.scaled(c).shifted_up(qpow);
}

// ---------------------------------------------------------------------------
// QScalar

QScalar::QScalar(const QRational& value)
    : num_(mpz_class(value.get_num())), den_(mpz_class(value.get_den())) {
  normalize();
}

QScalar::QScalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("division by zero QScalar");
  normalize();
}

QScalar QScalar::q() { return {IntPoly::monomial(1, 1), IntPoly(1)}; }

QScalar QScalar::q_pow(long k) {
  if (k >= 0) return {IntPoly::monomial(1, static_cast<std::size_t>(k)), IntPoly(1)};
  return {IntPoly(1), IntPoly::monomial(1, static_cast<std::size_t>(-k))};
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = gcd(num_, den_);
  if (!(g == IntPoly(1))) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool QScalar::is_one() const { return num_ == IntPoly(1) && den_ == IntPoly(1); }

bool QScalar::is_monomial() const { return !is_zero() && num_.is_monomial() && den_.is_monomial(); }

bool QScalar::is_rational() const { return num_.is_constant() && den_.is_constant(); }

QRational QScalar::rational_value() const {
  if (!is_rational()) throw DomainError("scalar depends on q: " + to_string());
  QRational r(num_.coeff(0), den_.coeff(0));
  r.canonicalize();
  return r;
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero QScalar");
  QScalar r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.lead() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QScalar QScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  QScalar result(1);
  QScalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::size_t QScalar::complexity() const {
  std::size_t bits = 0;
  for (const auto& c : num_.coeffs()) bits += mpz_sizeinbase(c.get_mpz_t(), 2);
  for (const auto& c : den_.coeffs()) bits += mpz_sizeinbase(c.get_mpz_t(), 2);
  return (num_.coeffs().size() + den_.coeffs().size()) * 64 + bits;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ = num_ + o.num_;
    normalize();
    return *this;
  }
  IntPoly g = gcd(den_, o.den_);
  IntPoly d1 = den_.exact_div(g);
  IntPoly d2 = o.den_.exact_div(g);
  IntPoly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = QScalar();
  IntPoly g2 = gcd(n, g);
  num_ = n.exact_div(g2);
  den_ = d1 * o.den_.exact_div(g2);
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QScalar();
  IntPoly g1 = gcd(num_, o.den_);
  IntPoly g2 = gcd(o.num_, den_);
  num_ = num_.exact_div(g1) * o.num_.exact_div(g2);
  den_ = den_.exact_div(g2) * o.den_.exact_div(g1);
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) {
  if (o.is_zero()) throw DomainError("division by zero QScalar");
  return *this *= o.inverse();
}

// ---------------------------------------------------------------------------
// Printing

std::string rational_to_string(const QRational& r) {
  QRational c = r;
  c.canonicalize();
  return c.get_str();
}

namespace {

std::string format_q_power(long e) {
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

// Appends one term `coeff * q^e` with sign handling.
void append_term(std::string& out, const QRational& coeff, long e, bool first) {
  const bool negative = coeff < 0;
  QRational mag = abs(coeff);
  std::string body;
  if (e == 0) {
    body = rational_to_string(mag);
  } else if (mag == 1) {
    body = format_q_power(e);
  } else {
    body = rational_to_string(mag) + "*" + format_q_power(e);
  }
  if (first) {
    out += negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

// Prints sum_i coeffs[i]/divisor * q^(i - shift), highest power first.
std::string format_laurent(const IntPoly& p, long shift, const mpz_class& divisor, std::size_t* terms) {
  std::string out;
  std::size_t count = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    QRational coeff(c[i], divisor);
    coeff.canonicalize();
    append_term(out, coeff, static_cast<long>(i) - shift, count == 0);
    ++count;
  }
  if (terms != nullptr) *terms = count;
  return out.empty() ? "0" : out;
}

}  // namespace

std::string QScalar::to_string() const {
  if (is_zero()) return "0";
  const std::size_t k = den_.order();
  IntPoly d = den_.shifted_down(k);
  if (d.is_constant()) {
    return format_laurent(num_, static_cast<long>(k), d.lead(), nullptr);
  }
  std::size_t nterms = 0;
  std::string n = format_laurent(num_, static_cast<long>(k), 1, &nterms);
  std::string ds = format_laurent(d, 0, 1, nullptr);
  if (nterms > 1) n = "(" + n + ")";
  return n + "/(" + ds + ")";
}

std::ostream& operator<<(std::ostream& os, const QScalar& s) { return os << s.to_string(); }

QRational specialize(const QScalar& a, const QRational& q0) {
  QRational d = a.den().evaluate(q0);
  if (d == 0) throw DomainError("pole of " + a.to_string() + " at q = " + rational_to_string(q0));
  QRational r = a.num().evaluate(q0) / d;
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  QScalar parse() {
    QScalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  QScalar expr() {
    QScalar v = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  bool starts_atom(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '('; }

  QScalar term() {
    QScalar v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        QScalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_atom(c)) {
        v *= unary();
      } else {
        return v;
      }
    }
  }

  QScalar unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  long exponent() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -e : e;
  }

  QScalar power() {
    QScalar base = atom();
    if (peek() == '^') {
      ++pos_;
      long e = exponent();
      if (e < 0 && base.is_zero()) fail("zero to a negative power");
      return base.pow(e);
    }
    return base;
  }

  QScalar atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      QScalar v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'q') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) fail("unknown identifier");
      return QScalar::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return QScalar(QRational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("expected a scalar");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

QRational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw ParseError("empty rational");
  QRational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// q-special functions

QScalar q_number(long n) {
  const QScalar q = QScalar::q();
  return (QScalar::q_pow(n) - QScalar::q_pow(-n)) / (q - q.inverse());
}

QScalar q_factorial(long n) {
  QScalar r(1);
  for (long k = 2; k <= n; ++k) r *= q_number(k);
  return r;
}

QScalar base_number(long n, const QScalar& t) {
  QScalar r;
  QScalar tp(1);
  for (long j = 0; j < n; ++j) {
    r += tp;
    tp *= t;
  }
  return r;
}

QScalar base_factorial(long n, const QScalar& t) {
  QScalar r(1);
  for (long k = 2; k <= n; ++k) r *= base_number(k, t);
  return r;
}

QScalar gauss_binomial(long n, long k, const QScalar& t) {
  if (k < 0 || k > n) throw DomainError("gauss_binomial: k out of range");
  QScalar num(1);
  QScalar den(1);
  for (long j = 1; j <= k; ++j) {
    num *= QScalar(1) - t.pow(n - k + j);
    den *= QScalar(1) - t.pow(j);
  }
  return num / den;
}

QScalar q_gamma_int(long m, const QScalar& t) {
  if (m < 1) throw DomainError("q_gamma_int: argument must be a positive integer");
  return base_factorial(m - 1, t);
}

ScalarPoly::ScalarPoly(std::vector<QScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ScalarPoly ScalarPoly::constant(const QScalar& c) { return ScalarPoly({c}); }

ScalarPoly ScalarPoly::monomial(const QScalar& c, std::size_t k) {
  std::vector<QScalar> v(k + 1);
  v[k] = c;
  return ScalarPoly(std::move(v));
}

void ScalarPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QScalar ScalarPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : QScalar(); }

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
  std::vector<QScalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return ScalarPoly(std::move(v));
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
  std::vector<QScalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return ScalarPoly(std::move(v));
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<QScalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ScalarPoly(std::move(v));
}

ScalarPoly q_pochhammer(const QScalar& a, const QScalar& t, long k) {
  ScalarPoly r = ScalarPoly::constant(1);
  QScalar tj(1);
  for (long j = 0; j < k; ++j) {
    r = r * ScalarPoly({QScalar(1), -(a * tj)});
    tj *= t;
  }
  return r;
}

QScalar jackson_integral_01(const ScalarPoly& f, const QScalar& p) {
  QScalar r;
  const QScalar one(1);
  for (std::size_t m = 0; m < f.coeffs().size(); ++m) {
    if (f.coeffs()[m].is_zero()) continue;
    r += f.coeffs()[m] * (one - p) / (one - p.pow(static_cast<long>(m) + 1));
  }
  return r;
}

}  // namespace suq2
