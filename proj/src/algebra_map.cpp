#include "suq2/algebra_map.hpp"

#include <sstream>
#include <utility>

namespace suq2 {

std::vector<Letter> monomial_letters(const Exponents& e) {
  std::vector<Letter> w;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) w.push_back({static_cast<int>(i), e[i]});
  return w;
}

std::vector<Relation> defining_relations(const Presentation& p) {
  std::vector<Relation> out;
  const int n = static_cast<int>(p.size());
  auto two = [&](int i, int j) {
    Exponents x = p.zero_exponents();
    x[static_cast<std::size_t>(i)] += 1;
    x[static_cast<std::size_t>(j)] += 1;
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p.pair_rule(i, j) != nullptr || p.eliminated(i) || p.eliminated(j)) continue;
      const std::string& gi = p.generator(static_cast<std::size_t>(i)).name;
      const std::string& gj = p.generator(static_cast<std::size_t>(j)).name;
      out.push_back({gj + " " + gi + " = q^" + std::to_string(p.skew(i, j)) + " " + gi + " " + gj,
                     {{j, 1}, {i, 1}},
                     {{QScalar::q_pow(p.skew(i, j)), two(i, j)}}});
    }
  }
  for (const auto& r : p.pair_rules()) {
    const std::string& lo = p.generator(static_cast<std::size_t>(r.lo)).name;
    const std::string& hi = p.generator(static_cast<std::size_t>(r.hi)).name;
    out.push_back({hi + " " + lo + " rule", {{r.hi, 1}, {r.lo, 1}}, r.swap_rhs});
    if (!r.cooccur_rhs.empty()) out.push_back({lo + " " + hi + " rule", {{r.lo, 1}, {r.hi, 1}}, r.cooccur_rhs});
  }
  for (const auto& [g, rhs] : p.eliminations()) {
    out.push_back({p.generator(static_cast<std::size_t>(g)).name + " elimination", {{g, 1}}, rhs});
  }
  for (int g = 0; g < n; ++g) {
    if (!p.invertible(g)) continue;
    const std::string& name = p.generator(static_cast<std::size_t>(g)).name;
    out.push_back({name + " " + name + "^-1 = 1", {{g, 1}, {g, -1}}, {{QScalar(1), p.zero_exponents()}}});
    out.push_back({name + "^-1 " + name + " = 1", {{g, -1}, {g, 1}}, {{QScalar(1), p.zero_exponents()}}});
  }
  return out;
}

std::string relation_to_string(const Presentation& p, const Relation& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    if (i > 0) os << ' ';
    os << p.generator(static_cast<std::size_t>(r.lhs[i].gen)).name;
    if (r.lhs[i].exp != 1) os << '^' << r.lhs[i].exp;
  }
  os << " = ";
  for (std::size_t i = 0; i < r.rhs.size(); ++i) {
    if (i > 0) os << " + ";
    const std::string m = monomial_to_string(p, r.rhs[i].exps);
    if (m.empty()) {
      os << r.rhs[i].coeff;
    } else {
      os << '(' << r.rhs[i].coeff << ") " << m;
    }
  }
  return os.str();
}

AlgebraMap::AlgebraMap(PresentationPtr source, PresentationPtr target, bool anti, bool antilinear)
    : source_(std::move(source)),
      target_(std::move(target)),
      anti_(anti),
      antilinear_(antilinear),
      images_(source_->size()),
      inverse_images_(source_->size()) {}

void AlgebraMap::set(int gen, NCPoly image) {
  if (image.presentation() == nullptr) image = NCPoly(target_);
  images_.at(static_cast<std::size_t>(gen)) = std::move(image);
}

void AlgebraMap::set_inverse(int gen, NCPoly image) {
  if (image.presentation() == nullptr) image = NCPoly(target_);
  inverse_images_.at(static_cast<std::size_t>(gen)) = std::move(image);
}

bool AlgebraMap::defined(int gen) const { return images_.at(static_cast<std::size_t>(gen)).has_value(); }

const NCPoly& AlgebraMap::image(int gen) const {
  const auto& v = images_.at(static_cast<std::size_t>(gen));
  if (!v) throw DomainError("map undefined on generator " + source_->generator(static_cast<std::size_t>(gen)).name);
  return *v;
}

const NCPoly& AlgebraMap::inverse_image(int gen) const {
  const auto& v = inverse_images_.at(static_cast<std::size_t>(gen));
  if (!v)
    throw DomainError("image of generator " + source_->generator(static_cast<std::size_t>(gen)).name +
                      " is not invertible under this map");
  return *v;
}

NCPoly AlgebraMap::power(int gen, int e) const {
  if (e >= 0) return image(gen).pow(e);
  return inverse_image(gen).pow(-e);
}

NCPoly AlgebraMap::apply_word(const std::vector<Letter>& w, const QScalar& c) const {
  NCPoly r = NCPoly::scalar(target_, antilinear_ ? c.conj() : c);
  if (anti_) {
    for (auto it = w.rbegin(); it != w.rend() && !r.is_zero(); ++it) r = r * power(it->gen, it->exp);
  } else {
    for (auto it = w.begin(); it != w.end() && !r.is_zero(); ++it) r = r * power(it->gen, it->exp);
  }
  return r;
}

NCPoly AlgebraMap::apply(const NCPoly& p) const {
  if (p.is_zero()) return NCPoly(target_);
  if (p.presentation()->name() != source_->name())
    throw DomainError("map from " + source_->name() + " applied to element of " + p.presentation()->name());
  NCPoly out(target_);
  for (const auto& [e, c] : p.terms()) out += apply_word(monomial_letters(e), c);
  return out;
}

std::optional<std::string> AlgebraMap::relation_violation() const {
  for (const auto& rel : defining_relations(*source_)) {
    NCPoly lhs = apply_word(rel.lhs);
    NCPoly rhs(target_);
    for (const auto& t : rel.rhs) rhs += apply_word(monomial_letters(t.exps), t.coeff);
    if (!(lhs == rhs)) {
      return relation_to_string(*source_, rel) + " maps to " + lhs.to_string() + " vs " + rhs.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> AlgebraMap::inverse_violation() const {
  const NCPoly one = NCPoly::scalar(target_, QScalar(1));
  for (int g = 0; g < static_cast<int>(source_->size()); ++g) {
    if (!source_->invertible(g)) continue;
    const NCPoly& f = image(g);
    const NCPoly& fi = inverse_image(g);
    if (!(f * fi == one) || !(fi * f == one))
      return "image of " + source_->generator(static_cast<std::size_t>(g)).name + " is not inverted by " +
             fi.to_string();
  }
  return std::nullopt;
}

AlgebraMap tensor_map(const std::vector<const AlgebraMap*>& maps) {
  std::vector<PresentationPtr> src;
  std::vector<PresentationPtr> dst;
  for (const auto* m : maps) {
    src.push_back(m->source());
    dst.push_back(m->target());
  }
  PresentationPtr s = tensor_of(src);
  PresentationPtr t = tensor_of(dst);
  AlgebraMap out(s, t);
  std::size_t src_off = 0;
  std::size_t dst_slot = 0;
  for (const auto* m : maps) {
    for (std::size_t g = 0; g < m->source()->size(); ++g) {
      const int gi = static_cast<int>(g);
      if (m->defined(gi)) out.set(static_cast<int>(src_off + g), embed(m->image(gi), t, dst_slot));
      if (m->source()->invertible(gi))
        out.set_inverse(static_cast<int>(src_off + g), embed(m->inverse_image(gi), t, dst_slot));
    }
    src_off += m->source()->size();
    dst_slot += m->target()->factor_count() == 0 ? 1 : m->target()->factor_count();
  }
  return out;
}

AlgebraMap identity_map(const PresentationPtr& p) {
  AlgebraMap m(p, p);
  for (int g = 0; g < static_cast<int>(p->size()); ++g) {
    m.set(g, NCPoly::gen(p, g));
    if (p->invertible(g)) m.set_inverse(g, NCPoly::gen(p, g, -1));
  }
  return m;
}

AlgebraMap inclusion_map(const PresentationPtr& from, const PresentationPtr& to) {
  if (from->size() != to->size()) throw DomainError("inclusion between algebras of different rank");
  AlgebraMap m(from, to);
  for (int g = 0; g < static_cast<int>(from->size()); ++g) {
    m.set(g, NCPoly::gen(to, g));
    if (from->invertible(g)) m.set_inverse(g, NCPoly::gen(to, g, -1));
  }
  return m;
}

}  // namespace suq2
