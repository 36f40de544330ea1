#include "suq2/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <utility>

namespace suq2 {

namespace {

using Word = std::vector<std::pair<int, int>>;  // (generator, exponent)

enum class Kind { Drop, Merge, Swap, Special, Elim, Cooccur };

struct Redex {
  Kind kind;
  std::size_t i;
  std::size_t j;
};

Word letters_of(const std::vector<RawTerm>::value_type& t) {
  Word w;
  for (std::size_t g = 0; g < t.exps.size(); ++g)
    if (t.exps[g] != 0) w.emplace_back(static_cast<int>(g), t.exps[g]);
  return w;
}

// q-exponent s with lo * x^p = q^s x^p * lo for a q-commuting generator x.
long commute_exponent(const Presentation& p, int lo, int x, int exp) {
  if (x > lo) return -static_cast<long>(p.skew(lo, x)) * exp;
  return static_cast<long>(p.skew(x, lo)) * exp;
}

std::vector<Redex> find_redexes(const Presentation& p, const Word& w) {
  std::vector<Redex> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].second == 0) out.push_back({Kind::Drop, i, i});
    else if (p.eliminated(w[i].first)) out.push_back({Kind::Elim, i, i});
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const int g1 = w[i].first;
    const int g2 = w[i + 1].first;
    if (w[i].second == 0 || w[i + 1].second == 0 || p.eliminated(g1) || p.eliminated(g2)) continue;
    if (g1 == g2) {
      out.push_back({Kind::Merge, i, i + 1});
    } else if (g1 > g2) {
      out.push_back({p.pair_rule(g2, g1) != nullptr ? Kind::Special : Kind::Swap, i, i + 1});
    }
  }
  for (const auto& rule : p.pair_rules()) {
    if (rule.cooccur_rhs.empty()) continue;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].first != rule.lo || w[i].second <= 0) continue;
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        const int g = w[j].first;
        if (g == rule.hi && w[j].second > 0) {
          out.push_back({Kind::Cooccur, i, j});
          break;
        }
        if (g == rule.lo || g == rule.hi || p.eliminated(g) || p.pair_rule(std::min(g, rule.lo), std::max(g, rule.lo)))
          break;
      }
    }
  }
  return out;
}

void push(std::vector<std::pair<Word, QScalar>>& out, Word w, const QScalar& c) {
  if (!c.is_zero()) out.emplace_back(std::move(w), c);
}

Word concat(std::initializer_list<Word> parts) {
  Word r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

std::vector<std::pair<Word, QScalar>> apply_redex(const Presentation& p, const Word& w, const Redex& r) {
  std::vector<std::pair<Word, QScalar>> out;
  const Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r.i));
  switch (r.kind) {
    case Kind::Drop: {
      Word x = w;
      x.erase(x.begin() + static_cast<std::ptrdiff_t>(r.i));
      push(out, std::move(x), QScalar(1));
      break;
    }
    case Kind::Merge: {
      Word x = w;
      x[r.i].second += x[r.j].second;
      x.erase(x.begin() + static_cast<std::ptrdiff_t>(r.j));
      push(out, std::move(x), QScalar(1));
      break;
    }
    case Kind::Swap: {
      Word x = w;
      const auto [h, f] = x[r.i];
      const auto [g, e] = x[r.j];
      std::swap(x[r.i], x[r.j]);
      push(out, std::move(x), QScalar::q_pow(static_cast<long>(p.skew(g, h)) * e * f));
      break;
    }
    case Kind::Special: {
      const auto [hi, f] = w[r.i];
      const auto [lo, e] = w[r.j];
      const Word tail(w.begin() + static_cast<std::ptrdiff_t>(r.j) + 1, w.end());
      for (const auto& t : p.pair_rule(lo, hi)->swap_rhs)
        push(out, concat({head, Word{{hi, f - 1}}, letters_of(t), Word{{lo, e - 1}}, tail}), t.coeff);
      break;
    }
    case Kind::Elim: {
      const auto [g, e] = w[r.i];
      const Word tail(w.begin() + static_cast<std::ptrdiff_t>(r.i) + 1, w.end());
      for (const auto& t : *p.elimination(g)) push(out, concat({head, Word{{g, e - 1}}, letters_of(t), tail}), t.coeff);
      break;
    }
    case Kind::Cooccur: {
      const auto [lo, k] = w[r.i];
      const auto [hi, t] = w[r.j];
      const Word mid(w.begin() + static_cast<std::ptrdiff_t>(r.i) + 1, w.begin() + static_cast<std::ptrdiff_t>(r.j));
      const Word tail(w.begin() + static_cast<std::ptrdiff_t>(r.j) + 1, w.end());
      long s = 0;
      for (const auto& [x, ex] : mid) s += commute_exponent(p, lo, x, ex);
      const QScalar qs = QScalar::q_pow(s);
      for (const auto& rt : p.pair_rule(lo, hi)->cooccur_rhs)
        push(out, concat({head, Word{{lo, k - 1}}, mid, letters_of(rt), Word{{hi, t - 1}}, tail}), rt.coeff * qs);
      break;
    }
  }
  return out;
}

Exponents to_exponents(const Presentation& p, const Word& w) {
  Exponents e = p.zero_exponents();
  for (const auto& [g, x] : w) e[static_cast<std::size_t>(g)] += x;
  return e;
}

}  // namespace

TermMap rewrite_word(const Presentation& p, const std::vector<Letter>& word, std::mt19937_64& rng) {
  std::map<Word, QScalar> state;
  Word start;
  for (const auto& l : word) start.emplace_back(l.gen, l.exp);
  state.emplace(std::move(start), QScalar(1));
  TermMap done;
  while (!state.empty()) {
    auto it = state.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(rng() % state.size()));
    Word w = it->first;
    QScalar c = it->second;
    state.erase(it);
    std::vector<Redex> redexes = find_redexes(p, w);
    if (redexes.empty()) {
      for (const auto& [g, e] : w)
        if (e < 0 && !p.invertible(g))
          throw DomainError("negative exponent on non-invertible generator " +
                            p.generator(static_cast<std::size_t>(g)).name);
      Exponents e = to_exponents(p, w);
      auto [dit, inserted] = done.try_emplace(e, c);
      if (!inserted) {
        dit->second += c;
        if (dit->second.is_zero()) done.erase(dit);
      }
      continue;
    }
    const Redex& r = redexes[rng() % redexes.size()];
    for (auto& [nw, nc] : apply_redex(p, w, r)) {
      auto [sit, inserted] = state.try_emplace(std::move(nw), nc * c);
      if (!inserted) {
        sit->second += nc * c;
        if (sit->second.is_zero()) state.erase(sit);
      }
    }
  }
  return done;
}

std::vector<Letter> random_word(const Presentation& p, int degree, std::mt19937_64& rng, int exp_range) {
  std::vector<Letter> w;
  int budget = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(degree, 1)));
  const int n = static_cast<int>(p.size());
  while (budget > 0) {
    const int g = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int cap = std::min(budget, exp_range);
    int e = 1 + static_cast<int>(rng() % static_cast<unsigned>(cap));
    if (p.invertible(g) && (rng() & 1U)) e = -e;
    w.push_back({g, e});
    budget -= std::abs(e);
  }
  return w;
}

NCPoly engine_word(const PresentationPtr& p, const std::vector<Letter>& word) {
  NCPoly r = NCPoly::scalar(p, QScalar(1));
  for (const auto& l : word) r = r * NCPoly::gen(p, l.gen, l.exp);
  return r;
}

std::string word_to_string(const Presentation& p, const std::vector<Letter>& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) os << ' ';
    os << p.generator(static_cast<std::size_t>(word[i].gen)).name;
    if (word[i].exp != 1) os << '^' << word[i].exp;
  }
  return os.str();
}

ConfluenceReport confluence_probe(const PresentationPtr& p, std::size_t samples, int degree, std::uint64_t seed,
                                  int exp_range) {
  ConfluenceReport rep;
  std::mt19937_64 words(seed);
  std::mt19937_64 first(seed ^ 0x5bd1e995ULL);
  std::mt19937_64 second(seed * 0x9e3779b97f4a7c15ULL + 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::vector<Letter> w = random_word(*p, degree, words, exp_range);
    const TermMap r1 = rewrite_word(*p, w, first);
    const TermMap r2 = rewrite_word(*p, w, second);
    const NCPoly eng = engine_word(p, w);
    ++rep.samples;
    if (r1 != r2) {
      ++rep.discrepancies;
      rep.witnesses.push_back(word_to_string(*p, w) + ": " + NCPoly(p, r1).to_string() + " vs " +
                              NCPoly(p, r2).to_string());
    }
    if (!(NCPoly(p, r1) == eng)) {
      ++rep.engine_mismatches;
      rep.witnesses.push_back(word_to_string(*p, w) + ": rewriting " + NCPoly(p, r1).to_string() + " vs engine " +
                              eng.to_string());
    }
    for (const auto& [e, c] : eng.terms())
      if (!p->is_canonical(e)) ++rep.basis_violations;
    for (const auto& [e, c] : r1)
      if (!p->is_canonical(e)) ++rep.basis_violations;
  }
  return rep;
}

}  // namespace suq2
