#pragma once

/// Exact sparse linear algebra over Q(q).

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "suq2/ncpoly.hpp"
#include "suq2/scalar.hpp"

namespace suq2 {

using SparseVec = std::map<std::size_t, QScalar>;

/// Linear system sum_j a_ij x_j = b_i over Q(q), solved by sparse
/// Gauss-Jordan elimination with low-complexity pivots.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t nvars) : nvars_(nvars) {}

  void add_equation(SparseVec lhs, const QScalar& rhs = QScalar());
  [[nodiscard]] std::size_t variables() const { return nvars_; }
  [[nodiscard]] std::size_t equations() const { return rows_.size(); }

  struct Solution {
    bool consistent = false;
    /// Particular solution with all free variables set to zero.
    SparseVec particular;
    /// Basis of the homogeneous solution space.
    std::vector<SparseVec> kernel;
  };

  [[nodiscard]] Solution solve() const;
  [[nodiscard]] std::size_t rank() const;

 private:
  std::size_t nvars_;
  std::vector<SparseVec> rows_;
  std::vector<QScalar> rhs_;
};

/// Matrix over Q(q), row-major.
using ScalarMatrix = std::vector<std::vector<QScalar>>;

ScalarMatrix identity_matrix(std::size_t n);
ScalarMatrix matmul(const ScalarMatrix& a, const ScalarMatrix& b);
std::vector<QScalar> matvec(const ScalarMatrix& a, const std::vector<QScalar>& v);
std::size_t matrix_rank(const ScalarMatrix& a);

/// Coefficients expressing `target` in the span of `basis`, if it lies there
/// (all polynomials over the same presentation).
std::optional<std::vector<QScalar>> express_in_span(const NCPoly& target, const std::vector<NCPoly>& basis);

/// Kernel of the linear map sending unknown j to images[j] (all images over
/// one presentation). Each kernel vector lists coefficients of the unknowns.
std::vector<std::vector<QScalar>> kernel_of_images(const std::vector<NCPoly>& images);

/// Rank of a family of polynomials.
std::size_t span_rank(const std::vector<NCPoly>& family);

/// Turns a sparse vector into a dense one of length n.
std::vector<QScalar> densify(const SparseVec& v, std::size_t n);

}  // namespace suq2
