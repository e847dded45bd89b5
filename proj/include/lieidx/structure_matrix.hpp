#pragma once

#include <vector>

#include "lieidx/polynomial.hpp"
#include "lieidx/structure_constants.hpp"

namespace lieidx {

/// Skew-symmetric n x n matrix with entry (i, j) = sum_s C_ij^s x_s, viewed
/// over the fraction field of Q[x_1..x_n]. Its rank there determines the
/// index of the algebra.
class StructureMatrix {
 public:
  explicit StructureMatrix(const StructureConstants& alg);

  int dim() const { return dim_; }
  const LinearForm& entry(int i, int j) const {
    return rows_[i - 1][j - 1];
  }  // 1-based

  /// Entrywise evaluation at a point p (the matrix M(p)).
  QMatrix evaluated_at(const std::vector<Rational>& p) const;

  std::vector<std::vector<Polynomial>> to_polynomials() const;

 private:
  int dim_;
  std::vector<std::vector<LinearForm>> rows_;
};

StructureMatrix structure_matrix(const StructureConstants& alg);

}  // namespace lieidx
