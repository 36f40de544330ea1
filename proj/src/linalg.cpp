#include "suq2/linalg.hpp"

#include <set>
#include <utility>

namespace suq2 {

void LinearSystem::add_equation(SparseVec lhs, const QScalar& rhs) {
  for (auto it = lhs.begin(); it != lhs.end();) {
    if (it->first >= nvars_) throw DomainError("LinearSystem: variable index out of range");
    it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
  }
  rows_.push_back(std::move(lhs));
  rhs_.push_back(rhs);
}

namespace {

struct Reduced {
  bool consistent = true;
  std::vector<SparseVec> rows;            // augmented, rhs at index nvars
  std::map<std::size_t, std::size_t> pivots;  // column -> row
  std::map<std::size_t, std::set<std::size_t>> col_rows;
};

Reduced reduce(const std::vector<SparseVec>& in_rows, const std::vector<QScalar>& rhs, std::size_t nvars) {
  Reduced R;
  R.rows = in_rows;
  for (std::size_t r = 0; r < R.rows.size(); ++r) {
    if (!rhs[r].is_zero()) R.rows[r][nvars] = rhs[r];
    for (const auto& [c, v] : R.rows[r])
      if (c < nvars) R.col_rows[c].insert(r);
  }
  for (std::size_t r = 0; r < R.rows.size(); ++r) {
    SparseVec& row = R.rows[r];
    std::size_t pivot = nvars;
    std::size_t best = 0;
    for (const auto& [c, v] : row) {
      if (c >= nvars) continue;
      const std::size_t cx = v.complexity();
      if (pivot == nvars || cx < best) {
        pivot = c;
        best = cx;
      }
    }
    if (pivot == nvars) {
      if (!row.empty()) R.consistent = false;
      continue;
    }
    const QScalar inv = row[pivot].inverse();
    if (!inv.is_one())
      for (auto& [c, v] : row) v *= inv;
    std::set<std::size_t> targets = R.col_rows[pivot];
    for (std::size_t r2 : targets) {
      if (r2 == r) continue;
      SparseVec& other = R.rows[r2];
      const QScalar factor = other[pivot];
      for (const auto& [c, v] : row) {
        auto [it, inserted] = other.try_emplace(c, QScalar());
        it->second -= factor * v;
        if (it->second.is_zero()) {
          other.erase(it);
          if (c < nvars) R.col_rows[c].erase(r2);
        } else if (inserted && c < nvars) {
          R.col_rows[c].insert(r2);
        }
      }
    }
    R.pivots[pivot] = r;
  }
  return R;
}

}  // namespace

LinearSystem::Solution LinearSystem::solve() const {
  Reduced R = reduce(rows_, rhs_, nvars_);
  Solution s;
  s.consistent = R.consistent;
  if (!R.consistent) return s;
  for (const auto& [c, r] : R.pivots) {
    auto it = R.rows[r].find(nvars_);
    if (it != R.rows[r].end()) s.particular[c] = it->second;
  }
  std::map<std::size_t, std::size_t> row_pivot;
  for (const auto& [c, r] : R.pivots) row_pivot[r] = c;
  for (std::size_t f = 0; f < nvars_; ++f) {
    if (R.pivots.count(f)) continue;
    SparseVec v;
    v[f] = QScalar(1);
    auto it = R.col_rows.find(f);
    if (it != R.col_rows.end()) {
      for (std::size_t r : it->second) v[row_pivot.at(r)] = -R.rows[r].at(f);
    }
    s.kernel.push_back(std::move(v));
  }
  return s;
}

std::size_t LinearSystem::rank() const { return reduce(rows_, rhs_, nvars_).pivots.size(); }

std::vector<QScalar> densify(const SparseVec& v, std::size_t n) {
  std::vector<QScalar> out(n);
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, std::vector<QScalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = QScalar(1);
  return m;
}

ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  ScalarMatrix out(n, std::vector<QScalar>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t l = 0; l < m; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

std::vector<QScalar> matvec(const ScalarMatrix& a, const std::vector<QScalar>& v) {
  std::vector<QScalar> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

std::size_t matrix_rank(const ScalarMatrix& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  LinearSystem sys(cols);
  for (const auto& row : a) {
    SparseVec r;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) r[j] = row[j];
    sys.add_equation(std::move(r));
  }
  return sys.rank();
}

namespace {

// One equation per monomial occurring in the family (and the target).
LinearSystem system_for(const std::vector<NCPoly>& family, const NCPoly* target) {
  std::map<Exponents, SparseVec, TermOrder> rows;
  for (std::size_t j = 0; j < family.size(); ++j)
    for (const auto& [e, c] : family[j].terms()) rows[e][j] = c;
  if (target != nullptr)
    for (const auto& [e, c] : target->terms()) rows.try_emplace(e);
  LinearSystem sys(family.size());
  for (auto& [e, row] : rows) sys.add_equation(std::move(row), target != nullptr ? target->coeff(e) : QScalar());
  return sys;
}

}  // namespace

std::optional<std::vector<QScalar>> express_in_span(const NCPoly& target, const std::vector<NCPoly>& basis) {
  LinearSystem::Solution s = system_for(basis, &target).solve();
  if (!s.consistent) return std::nullopt;
  return densify(s.particular, basis.size());
}

std::vector<std::vector<QScalar>> kernel_of_images(const std::vector<NCPoly>& images) {
  LinearSystem::Solution s = system_for(images, nullptr).solve();
  std::vector<std::vector<QScalar>> out;
  for (const auto& v : s.kernel) out.push_back(densify(v, images.size()));
  return out;
}

std::size_t span_rank(const std::vector<NCPoly>& family) { return system_for(family, nullptr).rank(); }

}  // namespace suq2
