#include "lieidx/structure_constants.hpp"

#include <algorithm>
#include <tuple>

#include "lieidx/errors.hpp"

namespace lieidx {

StructureConstants::StructureConstants(int dim) : dim_(dim) {
  if (dim < 1) throw DomainError("algebra dimension must be >= 1");
}

void StructureConstants::check_index(int i) const {
  if (i < 1 || i > dim_)
    throw DomainError("basis index " + std::to_string(i) +
                      " out of range 1.." + std::to_string(dim_));
}

void StructureConstants::add(int i, int j, int s, const Rational& c) {
  check_index(i);
  check_index(j);
  check_index(s);
  if (i == j || c.is_zero()) return;
  Rational v = c;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  SparseVec& vec = table_[{i, j}];
  auto it = std::lower_bound(
      vec.begin(), vec.end(), s,
      [](const auto& e, int t) { return e.first < t; });
  if (it != vec.end() && it->first == s) {
    it->second += v;
    if (it->second.is_zero()) vec.erase(it);
  } else {
    vec.emplace(it, s, v);
  }
  if (vec.empty()) table_.erase({i, j});
}

Rational StructureConstants::coeff(int i, int j, int s) const {
  check_index(i);
  check_index(j);
  check_index(s);
  if (i == j) return Rational(0);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return Rational(0);
  const SparseVec& vec = it->second;
  auto e = std::lower_bound(vec.begin(), vec.end(), s,
                            [](const auto& p, int t) { return p.first < t; });
  if (e == vec.end() || e->first != s) return Rational(0);
  return flip ? -e->second : e->second;
}

StructureConstants::SparseVec StructureConstants::bracket_basis(int i,
                                                                int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return {};
  if (!flip) return it->second;
  SparseVec neg = it->second;
  for (auto& [s, c] : neg) c = -c;
  return neg;
}

std::vector<std::tuple<int, int, int, Rational>> StructureConstants::entries()
    const {
  std::vector<std::tuple<int, int, int, Rational>> out;
  for (const auto& [ij, vec] : table_)
    for (const auto& [s, c] : vec) out.emplace_back(ij.first, ij.second, s, c);
  return out;
}

namespace {

// w += c * [x_t, x_k] for sparse accumulation into a dense vector
void add_bracket(const StructureConstants& alg, QVector& w, const Rational& c,
                 int t, int k) {
  for (const auto& [s, v] : alg.bracket_basis(t, k)) w[s - 1] += c * v;
}

}  // namespace

ValidationReport validate(const StructureConstants& alg) {
  ValidationReport report;
  const int n = alg.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        QVector w(n, Rational(0));
        for (const auto& [s, c] : alg.bracket_basis(j, k))
          add_bracket(alg, w, c, i, s);
        for (const auto& [s, c] : alg.bracket_basis(k, i))
          add_bracket(alg, w, c, j, s);
        for (const auto& [s, c] : alg.bracket_basis(i, j))
          add_bracket(alg, w, c, k, s);
        for (int t = 1; t <= n; ++t)
          if (!w[t - 1].is_zero())
            report.violations.push_back({i, j, k, t, w[t - 1]});
      }
  return report;
}

QVector bracket(const StructureConstants& alg, const QVector& x,
                const QVector& y) {
  const int n = alg.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw DomainError("vector dimension does not match algebra dimension");
  QVector w(n, Rational(0));
  for (const auto& [i, j, s, c] : alg.entries()) {
    // antisymmetric expansion over the stored i < j entries
    const Rational f = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
    if (!f.is_zero()) w[s - 1] += f * c;
  }
  return w;
}

QMatrix ad_matrix(const StructureConstants& alg, const QVector& x) {
  const int n = alg.dim();
  if (static_cast<int>(x.size()) != n)
    throw DomainError("vector dimension does not match algebra dimension");
  QMatrix m(n, QVector(n, Rational(0)));
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (x[i - 1].is_zero() || i == j) continue;
      for (const auto& [s, c] : alg.bracket_basis(i, j))
        m[s - 1][j - 1] += x[i - 1] * c;
    }
  }
  return m;
}

StructureConstants direct_sum_with_abelian(const StructureConstants& alg,
                                           int k) {
  if (k < 1) throw DomainError("abelian summand dimension must be >= 1");
  StructureConstants out(alg.dim() + k);
  for (const auto& [i, j, s, c] : alg.entries()) out.add(i, j, s, c);
  return out;
}

StructureConstants change_basis(const StructureConstants& alg,
                                const QMatrix& P) {
  const int n = alg.dim();
  if (static_cast<int>(P.size()) != n)
    throw DomainError("basis matrix dimension does not match the algebra");
  auto Pinv = inverse(P);
  if (!Pinv) throw DomainError("basis change matrix is singular");

  StructureConstants out(n);
  for (int a = 1; a <= n; ++a) {
    QVector ya(n);
    for (int i = 0; i < n; ++i) ya[i] = P[i][a - 1];
    for (int b = a + 1; b <= n; ++b) {
      QVector yb(n);
      for (int i = 0; i < n; ++i) yb[i] = P[i][b - 1];
      QVector w = bracket(alg, ya, yb);     // in the old basis
      QVector coords = matvec(*Pinv, w);    // back to the new basis
      for (int s = 1; s <= n; ++s)
        if (!coords[s - 1].is_zero()) out.add(a, b, s, coords[s - 1]);
    }
  }
  return out;
}

}  // namespace lieidx
