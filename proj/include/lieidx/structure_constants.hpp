#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lieidx/qlinalg.hpp"
#include "lieidx/rational.hpp"

namespace lieidx {

/// Sparse bracket tensor C_ij^s over Q on the fixed basis x_1..x_n.
/// Only i < j is stored; i > j follows by antisymmetry and [x_i, x_i] = 0.
/// The Jacobi identity is checked by validate(), never assumed.
class StructureConstants {
 public:
  using SparseVec = std::vector<std::pair<int, Rational>>;  // (s, coeff)

  explicit StructureConstants(int dim);

  int dim() const { return dim_; }

  /// Adds c to C_ij^s; i > j is normalized by antisymmetry; i == j or a
  /// resulting zero coefficient stores nothing.
  void add(int i, int j, int s, const Rational& c);

  /// Coefficient C_ij^s for any i, j (antisymmetry applied).
  Rational coeff(int i, int j, int s) const;

  /// [x_i, x_j] as a sparse coordinate vector, any i, j.
  SparseVec bracket_basis(int i, int j) const;

  /// Stored entries with i < j, ordered by (i, j, s).
  std::vector<std::tuple<int, int, int, Rational>> entries() const;

  bool operator==(const StructureConstants& o) const {
    return dim_ == o.dim_ && table_ == o.table_;
  }

 private:
  void check_index(int i) const;

  int dim_;
  std::map<std::pair<int, int>, SparseVec> table_;  // key (i, j) with i < j
};

struct JacobiViolation {
  int i, j, k;        // basis triple, i < j < k
  int t;              // coordinate with nonzero residual
  Rational residual;  // coefficient of x_t in the Jacobi sum
};

/// Violations of the Jacobi identity; empty means the tensor is a Lie
/// algebra. The residual for (i, j, k) is the coordinate vector of
/// [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]].
struct ValidationReport {
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const StructureConstants& alg);

/// [x, y] for coordinate vectors.
QVector bracket(const StructureConstants& alg, const QVector& x,
                const QVector& y);

/// Matrix of ad x: column j holds the coordinates of [x, x_j].
QMatrix ad_matrix(const StructureConstants& alg, const QVector& x);

/// Appends k central basis vectors.
StructureConstants direct_sum_with_abelian(const StructureConstants& alg,
                                           int k);

/// Same bracket expressed in the basis y_a = sum_i P[i][a] x_i.
/// Throws on singular P. change_basis(alg, I) == alg, and
/// change_basis(change_basis(alg, P), Q) == change_basis(alg, P*Q).
StructureConstants change_basis(const StructureConstants& alg,
                                const QMatrix& P);

}  // namespace lieidx
