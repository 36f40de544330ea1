#include "suq2/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>

namespace suq2 {

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += std::abs(x);
  return d;
}

bool TermOrder::operator()(const Exponents& x, const Exponents& y) const {
  const int dx = total_degree(x);
  const int dy = total_degree(y);
  if (dx != dy) return dx < dy;
  return y < x;
}

std::size_t ExpHash::operator()(const Exponents& e) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : e) {
    h ^= static_cast<std::size_t>(static_cast<unsigned int>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(std::string name, std::vector<GeneratorInfo> gens)
    : name_(std::move(name)), gens_(std::move(gens)), skew_(gens_.size() * gens_.size(), 0) {}

void Presentation::set_skew(int i, int j, int exponent) {
  if (i > j) std::swap(i, j);
  skew_[static_cast<std::size_t>(i) * gens_.size() + static_cast<std::size_t>(j)] = exponent;
}

int Presentation::skew(int i, int j) const {
  return skew_[static_cast<std::size_t>(i) * gens_.size() + static_cast<std::size_t>(j)];
}

void Presentation::add_pair_rule(PairRule rule) { pair_rules_.push_back(std::move(rule)); }

void Presentation::add_elimination(int gen, std::vector<RawTerm> rhs) { eliminations_[gen] = std::move(rhs); }

bool Presentation::eliminated(int g) const { return eliminations_.count(g) != 0; }

const std::vector<RawTerm>* Presentation::elimination(int g) const {
  auto it = eliminations_.find(g);
  return it == eliminations_.end() ? nullptr : &it->second;
}

const PairRule* Presentation::pair_rule(int lo, int hi) const {
  for (const auto& r : pair_rules_)
    if (r.lo == lo && r.hi == hi) return &r;
  return nullptr;
}

std::optional<int> Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Presentation::is_canonical(const Exponents& e) const {
  if (e.size() != gens_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 && !gens_[i].invertible) return false;
    if (e[i] != 0 && eliminated(static_cast<int>(i))) return false;
  }
  for (const auto& r : pair_rules_) {
    if (!r.cooccur_rhs.empty() && e[static_cast<std::size_t>(r.lo)] > 0 && e[static_cast<std::size_t>(r.hi)] > 0)
      return false;
  }
  return true;
}

namespace {

void add_term(TermMap& m, const Exponents& e, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void add_scaled(TermMap& dst, const TermMap& src, const QScalar& c) {
  for (const auto& [e, v] : src) add_term(dst, e, v * c);
}

}  // namespace

TermMap Presentation::mul_mono_gen(const Exponents& m, int g, int e) const {
  if (e == 0) return TermMap{{m, QScalar(1)}};
  if (e < 0 && !invertible(g))
    throw DomainError("negative exponent on non-invertible generator " + gens_[static_cast<std::size_t>(g)].name);
  if (const auto* rhs = elimination(g)) {
    TermMap cur{{m, QScalar(1)}};
    for (int k = 0; k < e; ++k) cur = mul_terms_raw(cur, *rhs);
    return cur;
  }
  Exponents key = m;
  key.push_back(g);
  key.push_back(e);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  TermMap result = compute_mul(m, g, e);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(std::move(key), result);
  }
  return result;
}

TermMap Presentation::compute_mul(const Exponents& m, int g, int e) const {
  const int n = static_cast<int>(gens_.size());
  long acc = 0;
  for (int h = n - 1; h > g; --h) {
    const int f = m[static_cast<std::size_t>(h)];
    if (f == 0) continue;
    if (const PairRule* rule = pair_rule(g, h)) {
      if (e < 0 || f < 0) throw DomainError("special pair with negative exponent");
      // m = P h^f S with S above h; h^f g^e = h^(f-1) (h g) g^(e-1).
      Exponents prefix = m;
      Exponents suffix = zero_exponents();
      for (int k = h + 1; k < n; ++k) {
        suffix[static_cast<std::size_t>(k)] = m[static_cast<std::size_t>(k)];
        prefix[static_cast<std::size_t>(k)] = 0;
      }
      prefix[static_cast<std::size_t>(h)] -= 1;
      TermMap cur{{prefix, QScalar::q_pow(acc)}};
      cur = mul_terms_raw(cur, rule->swap_rhs);
      cur = mul_terms_gen(cur, g, e - 1);
      return mul_terms_mono(cur, suffix);
    }
    acc += static_cast<long>(skew(g, h)) * e * f;
  }
  Exponents r = m;
  r[static_cast<std::size_t>(g)] += e;
  if (r[static_cast<std::size_t>(g)] < 0 && !invertible(g))
    throw DomainError("negative exponent on non-invertible generator " + gens_[static_cast<std::size_t>(g)].name);
  return reduce_cooccurrence(r, QScalar::q_pow(acc));
}

TermMap Presentation::reduce_cooccurrence(const Exponents& r, const QScalar& coeff) const {
  for (const auto& rule : pair_rules_) {
    if (rule.cooccur_rhs.empty()) continue;
    const auto lo = static_cast<std::size_t>(rule.lo);
    const auto hi = static_cast<std::size_t>(rule.hi);
    if (r[lo] <= 0 || r[hi] <= 0) continue;
    // lo^k X hi^t = q^s lo^(k-1) X (lo hi) hi^(t-1), X strictly between.
    long s = 0;
    for (std::size_t x = lo + 1; x < hi; ++x) s -= static_cast<long>(skew(rule.lo, static_cast<int>(x))) * r[x];
    Exponents prefix = r;
    Exponents suffix = zero_exponents();
    for (std::size_t k = hi; k < r.size(); ++k) {
      suffix[k] = r[k];
      prefix[k] = 0;
    }
    prefix[lo] -= 1;
    suffix[hi] -= 1;
    TermMap cur{{prefix, coeff * QScalar::q_pow(s)}};
    cur = mul_terms_raw(cur, rule.cooccur_rhs);
    return mul_terms_mono(cur, suffix);
  }
  return TermMap{{r, coeff}};
}

TermMap Presentation::mul_terms_gen(const TermMap& terms, int g, int e) const {
  if (e == 0) return terms;
  TermMap out;
  for (const auto& [m, c] : terms) add_scaled(out, mul_mono_gen(m, g, e), c);
  return out;
}

TermMap Presentation::mul_terms_mono(const TermMap& terms, const Exponents& word) const {
  TermMap cur = terms;
  for (std::size_t i = 0; i < word.size() && !cur.empty(); ++i) {
    if (word[i] != 0) cur = mul_terms_gen(cur, static_cast<int>(i), word[i]);
  }
  return cur;
}

TermMap Presentation::mul_terms_raw(const TermMap& terms, const std::vector<RawTerm>& rhs) const {
  TermMap out;
  for (const auto& t : rhs) add_scaled(out, mul_terms_mono(terms, t.exps), t.coeff);
  return out;
}

TermMap Presentation::mul_terms(const TermMap& left, const TermMap& right) const {
  TermMap out;
  for (const auto& [m, c] : right) add_scaled(out, mul_terms_mono(left, m), c);
  return out;
}

PresentationPtr Presentation::tensor(const std::vector<PresentationPtr>& factors) {
  std::vector<PresentationPtr> flat;
  for (const auto& f : factors) {
    if (f->factor_count() > 1) {
      flat.insert(flat.end(), f->factors().begin(), f->factors().end());
    } else {
      flat.push_back(f);
    }
  }
  std::string name;
  std::vector<GeneratorInfo> gens;
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i > 0) name += "(x)";
    name += flat[i]->name();
    offsets.push_back(gens.size());
    gens.insert(gens.end(), flat[i]->generators().begin(), flat[i]->generators().end());
  }
  auto t = std::make_shared<Presentation>(name, gens);
  const std::size_t total = gens.size();
  auto shift = [&](const Exponents& e, std::size_t off) {
    Exponents r(total, 0);
    std::copy(e.begin(), e.end(), r.begin() + static_cast<std::ptrdiff_t>(off));
    return r;
  };
  auto shift_terms = [&](const std::vector<RawTerm>& v, std::size_t off) {
    std::vector<RawTerm> r;
    for (const auto& rt : v) r.push_back({rt.coeff, shift(rt.exps, off)});
    return r;
  };
  for (std::size_t f = 0; f < flat.size(); ++f) {
    const auto& p = *flat[f];
    const std::size_t off = offsets[f];
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        t->set_skew(static_cast<int>(off + i), static_cast<int>(off + j), p.skew(static_cast<int>(i), static_cast<int>(j)));
    for (const auto& r : p.pair_rules()) {
      t->add_pair_rule({r.lo + static_cast<int>(off), r.hi + static_cast<int>(off), shift_terms(r.swap_rhs, off),
                        shift_terms(r.cooccur_rhs, off)});
    }
    for (const auto& [g, rhs] : p.eliminations()) t->add_elimination(g + static_cast<int>(off), shift_terms(rhs, off));
  }
  t->offsets_ = offsets;
  t->factors_ = flat;
  return t;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly::NCPoly(PresentationPtr p, TermMap terms) : pres_(std::move(p)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

NCPoly NCPoly::scalar(PresentationPtr p, const QScalar& c) {
  TermMap t;
  if (!c.is_zero()) t.emplace(p->zero_exponents(), c);
  return {std::move(p), std::move(t)};
}

NCPoly NCPoly::word(PresentationPtr p, const Exponents& e, const QScalar& c) {
  if (e.size() != p->size()) throw DomainError("exponent vector length mismatch");
  if (c.is_zero()) return NCPoly(std::move(p));
  if (p->is_canonical(e)) return {p, TermMap{{e, c}}};
  TermMap start{{p->zero_exponents(), c}};
  TermMap t = p->mul_terms_mono(start, e);
  return {std::move(p), std::move(t)};
}

NCPoly NCPoly::gen(PresentationPtr p, int g, int e) {
  Exponents w = p->zero_exponents();
  w[static_cast<std::size_t>(g)] = e;
  return word(std::move(p), w);
}

NCPoly NCPoly::gen(PresentationPtr p, std::string_view name, int e) {
  auto idx = p->index_of(name);
  if (!idx) throw ParseError("unknown generator '" + std::string(name) + "' in " + p->name());
  return gen(std::move(p), *idx, e);
}

bool NCPoly::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

QScalar NCPoly::constant_term() const {
  if (!pres_) return {};
  return coeff(pres_->zero_exponents());
}

QScalar NCPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QScalar() : it->second;
}

int NCPoly::filtration_degree() const {
  if (terms_.empty()) return INT_MIN;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void NCPoly::require_same(const NCPoly& o) const {
  if (pres_ != o.pres_ && (!pres_ || !o.pres_ || pres_->name() != o.pres_->name()))
    throw DomainError("presentation mismatch: " + (pres_ ? pres_->name() : std::string("none")) + " vs " +
                      (o.pres_ ? o.pres_->name() : std::string("none")));
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (!pres_) pres_ = o.pres_;
  if (o.terms_.empty()) return *this;
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (!pres_) pres_ = o.pres_;
  if (o.terms_.empty()) return *this;
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  a.require_same(b);
  const auto& p = a.pres_ ? a.pres_ : b.pres_;
  if (!p) return {};
  return {p, p->mul_terms(a.terms_, b.terms_)};
}

NCPoly NCPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative power of a polynomial");
  NCPoly r = scalar(pres_, QScalar(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (a.pres_ != b.pres_ && (!a.pres_ || !b.pres_ || a.pres_->name() != b.pres_->name())) return false;
  return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string factor_string(const Presentation& p, const Exponents& e, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += p.generator(i).name;
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

bool needs_parens(const QScalar& c) {
  if (!c.den().is_monomial()) return false;
  std::size_t nonzero = 0;
  for (const auto& x : c.num().coeffs())
    if (x != 0) ++nonzero;
  return nonzero > 1;
}

}  // namespace

std::string monomial_to_string(const Presentation& p, const Exponents& e) {
  if (p.factor_count() <= 1) return factor_string(p, e, 0, e.size());
  std::string out;
  const auto& offs = p.factor_offsets();
  for (std::size_t f = 0; f < offs.size(); ++f) {
    const std::size_t end = f + 1 < offs.size() ? offs[f + 1] : e.size();
    std::string part = factor_string(p, e, offs[f], end);
    if (f > 0) out += " (x) ";
    out += part.empty() ? "1" : part;
  }
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string ms = monomial_to_string(*pres_, e);
    std::string body;
    if (ms.empty()) {
      body = c.to_string();
    } else if (c.is_one()) {
      body = ms;
    } else if ((-c).is_one()) {
      body = "-" + ms;
    } else if (needs_parens(c)) {
      body = "(" + c.to_string() + ") " + ms;
    } else {
      body = c.to_string() + " " + ms;
    }
    if (first) {
      out = body;
      first = false;
    } else if (body[0] == '-') {
      out += " - " + body.substr(1);
    } else {
      out += " + " + body;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  PolyParser(PresentationPtr p, std::string_view text) : pres_(std::move(p)), text_(text) {}

  NCPoly parse() {
    NCPoly v = expr();
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

  NCPoly scalar(const QScalar& c) const { return NCPoly::scalar(pres_, c); }

  NCPoly expr() {
    NCPoly v = term();
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

  static bool starts_atom(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  NCPoly term() {
    NCPoly v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * unary();
      } else if (c == '/') {
        ++pos_;
        NCPoly d = unary();
        if (!d.is_scalar()) throw DomainError("division by a non-scalar expression");
        if (d.is_zero()) throw DomainError("division by zero");
        v *= d.constant_term().inverse();
      } else if (starts_atom(c)) {
        v = v * unary();
      } else {
        return v;
      }
    }
  }

  NCPoly unary() {
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

  int exponent() {
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
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return neg ? -e : e;
  }

  NCPoly power() {
    std::optional<int> generator;
    NCPoly base = atom(generator);
    if (peek() != '^') return base;
    ++pos_;
    const int e = exponent();
    if (generator) return NCPoly::gen(pres_, *generator, e);
    if (e >= 0) return base.pow(e);
    if (base.is_scalar()) {
      if (base.is_zero()) throw DomainError("zero to a negative power");
      return scalar(base.constant_term().inverse().pow(-e));
    }
    return invert_monomial(base).pow(-e);
  }

  NCPoly atom(std::optional<int>& generator) {
    char c = peek();
    if (c == '(') {
      ++pos_;
      NCPoly v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return scalar(QScalar(QRational(mpz_class(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
      std::string ident(text_.substr(pos_, end - pos_));
      if (ident != "q" && !pres_->index_of(ident) && ident.size() > 1) {
        // Run of single-letter names such as "bc".
        ident = ident.substr(0, 1);
        end = pos_ + 1;
      }
      if (ident == "q") {
        pos_ = end;
        return scalar(QScalar::q());
      }
      auto idx = pres_->index_of(ident);
      if (!idx) fail("unknown identifier '" + ident + "' for algebra " + pres_->name());
      pos_ = end;
      generator = *idx;
      return NCPoly::gen(pres_, *idx, 1);
    }
    fail("expected an expression");
  }

  PresentationPtr pres_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_poly(const PresentationPtr& p, std::string_view text) { return PolyParser(p, text).parse(); }

// ---------------------------------------------------------------------------
// Standard algebras

namespace {

Exponents gexp(int a, int b, int c, int d) { return {a, b, c, d}; }

std::shared_ptr<Presentation> make_g_family(const std::string& name, bool b_inv, bool d_inv) {
  auto p = std::make_shared<Presentation>(
      name, std::vector<GeneratorInfo>{{"a", false}, {"b", b_inv}, {"c", false}, {"d", d_inv}});
  p->set_skew(kA, kB, -1);
  p->set_skew(kA, kC, -1);
  p->set_skew(kB, kC, 0);
  p->set_skew(kB, kD, -1);
  p->set_skew(kC, kD, -1);
  if (d_inv) {
    // From d a = 1 + q^-1 b c and d^-1 b = q b d^-1, d^-1 c = q c d^-1.
    p->add_elimination(kA, {{QScalar(1), gexp(0, 0, 0, -1)}, {QScalar::q(), gexp(0, 1, 1, -1)}});
  } else {
    p->add_pair_rule({kA,
                      kD,
                      {{QScalar(1), gexp(0, 0, 0, 0)}, {QScalar::q_pow(-1), gexp(0, 1, 1, 0)}},
                      {{QScalar(1), gexp(0, 0, 0, 0)}, {QScalar::q(), gexp(0, 1, 1, 0)}}});
  }
  return p;
}

}  // namespace

const PresentationPtr& algebra_G() {
  static const PresentationPtr p = make_g_family("G", false, false);
  return p;
}

const PresentationPtr& algebra_G_b() {
  static const PresentationPtr p = make_g_family("G_b", true, false);
  return p;
}

const PresentationPtr& algebra_G_d() {
  static const PresentationPtr p = make_g_family("G_d", false, true);
  return p;
}

const PresentationPtr& algebra_G_bd() {
  static const PresentationPtr p = make_g_family("G_bd", true, true);
  return p;
}

const PresentationPtr& algebra_borel() {
  static const PresentationPtr p = [] {
    auto b = std::make_shared<Presentation>("Borel", std::vector<GeneratorInfo>{{"lambda", true}, {"xi", false}});
    b->set_skew(kLambda, kXi, -1);
    return b;
  }();
  return p;
}

const PresentationPtr& algebra_manin() {
  static const PresentationPtr p = [] {
    auto m = std::make_shared<Presentation>("Manin", std::vector<GeneratorInfo>{{"x", false}, {"y", false}});
    m->set_skew(kX, kY, -1);
    return m;
  }();
  return p;
}

const PresentationPtr& algebra_scalars() {
  static const PresentationPtr p = std::make_shared<Presentation>("k", std::vector<GeneratorInfo>{});
  return p;
}

PresentationPtr algebra_by_name(std::string_view name) {
  if (name == "G") return algebra_G();
  if (name == "G_b") return algebra_G_b();
  if (name == "G_d") return algebra_G_d();
  if (name == "G_bd") return algebra_G_bd();
  if (name == "Borel") return algebra_borel();
  if (name == "Manin") return algebra_manin();
  throw DomainError("unknown algebra '" + std::string(name) + "'");
}

PresentationPtr tensor_of(const std::vector<PresentationPtr>& factors) {
  static std::mutex mutex;
  static std::map<std::string, PresentationPtr> cache;
  std::string key;
  for (const auto& f : factors) {
    if (f->factor_count() > 1) {
      for (const auto& g : f->factors()) key += g->name() + "|";
    } else {
      key += f->name() + "|";
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  PresentationPtr t = Presentation::tensor(factors);
  cache.emplace(key, t);
  return t;
}

NCPoly embed(const NCPoly& p, const PresentationPtr& t, std::size_t slot) {
  const std::size_t off = t->factor_offsets().at(slot);
  if (off + p.presentation()->size() > t->size()) throw DomainError("embed: factor does not fit");
  TermMap out;
  for (const auto& [e, c] : p.terms()) {
    Exponents r = t->zero_exponents();
    std::copy(e.begin(), e.end(), r.begin() + static_cast<std::ptrdiff_t>(off));
    out.emplace(std::move(r), c);
  }
  return {t, std::move(out)};
}

Exponents factor_part(const Presentation& t, const Exponents& e, std::size_t slot) {
  const auto& offs = t.factor_offsets();
  const std::size_t begin = offs.at(slot);
  const std::size_t end = slot + 1 < offs.size() ? offs[slot + 1] : e.size();
  return {e.begin() + static_cast<std::ptrdiff_t>(begin), e.begin() + static_cast<std::ptrdiff_t>(end)};
}

Exponents join_parts(const Presentation& t, const std::vector<Exponents>& parts) {
  Exponents r;
  r.reserve(t.size());
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  if (r.size() != t.size()) throw DomainError("join_parts: size mismatch");
  return r;
}

std::vector<Exponents> basis_monomials(const Presentation& p, int degree) {
  std::vector<Exponents> out;
  Exponents cur = p.zero_exponents();
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == cur.size()) {
      if (p.is_canonical(cur)) out.push_back(cur);
      return;
    }
    if (p.eliminated(static_cast<int>(i))) {
      cur[i] = 0;
      rec(i + 1, budget);
      return;
    }
    const int lo = p.invertible(static_cast<int>(i)) ? -budget : 0;
    for (int v = lo; v <= budget; ++v) {
      cur[i] = v;
      rec(i + 1, budget - std::abs(v));
    }
    cur[i] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), TermOrder{});
  return out;
}

NCPoly invert_monomial(const NCPoly& p) {
  if (p.size() != 1) throw DomainError("not an invertible monomial: " + p.to_string());
  const auto& [e, c] = *p.terms().begin();
  const auto& pres = p.presentation();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0 && !pres->invertible(static_cast<int>(i)))
      throw DomainError("not an invertible monomial: " + p.to_string());
  NCPoly r = NCPoly::scalar(pres, c.inverse());
  for (std::size_t i = e.size(); i-- > 0;) {
    if (e[i] != 0) r = r * NCPoly::gen(pres, static_cast<int>(i), -e[i]);
  }
  return r;
}

}  // namespace suq2
