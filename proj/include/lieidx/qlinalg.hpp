#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieidx/rational.hpp"

namespace lieidx {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major, rectangular

QMatrix identity_matrix(int n);
QMatrix matmul(const QMatrix& a, const QMatrix& b);
QVector matvec(const QMatrix& a, const QVector& v);

/// In-place reduction to reduced row echelon form; returns the pivot columns.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

/// Canonical basis of the null space {x : m x = 0}, rows in reduced echelon
/// form. Empty when the kernel is trivial.
QMatrix kernel_basis(const QMatrix& m);

Rational determinant(QMatrix m);

/// Exact inverse; nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

/// Subspace of Q^n given by a basis in reduced row echelon form, so equal
/// subspaces compare equal regardless of how they were produced.
class Subspace {
 public:
  Subspace() = default;
  /// Canonicalizes the spanning set (need not be independent).
  Subspace(QMatrix spanning, int ambient_dim);
  static Subspace whole_space(int n);
  static Subspace zero(int n) { return Subspace(QMatrix{}, n); }

  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return ambient_; }
  const QMatrix& basis() const { return basis_; }

  bool contains(const QVector& v) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  QMatrix basis_;  // rref rows, no zero rows
  int ambient_ = 0;
};

std::string to_string(const QVector& v);

}  // namespace lieidx
