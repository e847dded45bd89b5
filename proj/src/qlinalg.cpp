#include "lieidx/qlinalg.hpp"

#include <algorithm>

#include "lieidx/errors.hpp"

namespace lieidx {

QMatrix identity_matrix(int n) {
  QMatrix m(n, QVector(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), p = b[0].size();
  QMatrix r(n, QVector(p, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw DomainError("matrix dimension mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

QVector matvec(const QMatrix& a, const QVector& v) {
  QVector r(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw DomainError("matrix dimension mismatch");
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero()) r[i] += a[i][j] * v[j];
  }
  return r;
}

std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Rational inv = Rational(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

QMatrix kernel_basis(const QMatrix& m) {
  if (m.empty()) return {};
  QMatrix a = m;
  const int cols = static_cast<int>(a[0].size());
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  QMatrix ker;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    QVector v(cols, Rational(0));
    v[c] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
    ker.push_back(std::move(v));
  }
  // free-variable basis, re-reduced for a canonical answer
  rref(ker);
  return ker;
}

Rational determinant(QMatrix m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw DomainError("determinant of a non-square matrix");
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Rational inv = Rational(1) / m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Rational f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const int n = static_cast<int>(m.size());
  QMatrix aug(n, QVector(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw DomainError("inverse of a non-square matrix");
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Rational(1);
  }
  std::vector<int> pivots = rref(aug);
  // pivots must all land in the left block
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] >= n))
    return std::nullopt;
  QMatrix inv(n, QVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Subspace::Subspace(QMatrix spanning, int ambient_dim) : ambient_(ambient_dim) {
  for (const auto& row : spanning)
    if (static_cast<int>(row.size()) != ambient_dim)
      throw DomainError("spanning vector has wrong dimension");
  rref(spanning);
  for (auto& row : spanning) {
    bool zero = std::all_of(row.begin(), row.end(),
                            [](const Rational& x) { return x.is_zero(); });
    if (!zero) basis_.push_back(std::move(row));
  }
}

Subspace Subspace::whole_space(int n) { return Subspace(identity_matrix(n), n); }

bool Subspace::contains(const QVector& v) const {
  if (static_cast<int>(v.size()) != ambient_) return false;
  QVector r = v;
  for (const auto& row : basis_) {
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!row[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0 || r[lead].is_zero()) continue;
    const Rational f = r[lead];  // row has leading 1
    for (int j = 0; j < ambient_; ++j) r[j] -= f * row[j];
  }
  return std::all_of(r.begin(), r.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

std::string to_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace lieidx
