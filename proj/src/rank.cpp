#include "lieidx/rank.hpp"

#include <algorithm>
#include <tuple>

#include "lieidx/errors.hpp"
#include "lieidx/qlinalg.hpp"

namespace lieidx {

namespace {

struct Pivot {
  int row = -1, col = -1;
  long degree = 0;
  long terms = 0;
};

// nonzero entry minimizing (degree, term count, row, col) in the active block
bool find_pivot(const PolyMatrix& m, int k, Pivot& out) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  bool found = false;
  for (int i = k; i < rows; ++i)
    for (int j = k; j < cols; ++j) {
      const Polynomial& p = m[i][j];
      if (p.is_zero()) continue;
      auto key = std::make_tuple(static_cast<long>(p.degree()),
                                 static_cast<long>(p.term_count()),
                                 static_cast<long>(i), static_cast<long>(j));
      auto cur = std::make_tuple(out.degree, out.terms,
                                 static_cast<long>(out.row),
                                 static_cast<long>(out.col));
      if (!found || key < cur) {
        out = {i, j, std::get<0>(key), std::get<1>(key)};
        found = true;
      }
    }
  return found;
}

void strip_row_content(PolyMatrix& m, int row, int from_col) {
  mpz_class num = 0, den = 1;
  const int cols = static_cast<int>(m[row].size());
  for (int j = from_col; j < cols; ++j) {
    if (m[row][j].is_zero()) continue;
    Rational c = m[row][j].content();
    num = gcd(num, c.numerator());
    den = lcm(den, c.denominator());
  }
  if (num == 0 || (num == 1 && den == 1)) return;
  const Rational inv(den, num);
  for (int j = from_col; j < cols; ++j)
    if (!m[row][j].is_zero()) m[row][j] = m[row][j].scaled(inv);
}

// Fraction-free elimination with row content stripping; returns the number
// of completed stages, which is the rank.
int bareiss(PolyMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  Polynomial prev(1);
  int stage = 0;
  for (; stage < std::min(rows, cols); ++stage) {
    Pivot piv;
    if (!find_pivot(m, stage, piv)) break;
    if (piv.row != stage) std::swap(m[piv.row], m[stage]);
    if (piv.col != stage)
      for (int i = 0; i < rows; ++i) std::swap(m[i][piv.col], m[i][stage]);
    const Polynomial& pivot = m[stage][stage];
    for (int i = stage + 1; i < rows; ++i) {
      if (m[i][stage].is_zero()) {
        for (int j = stage + 1; j < cols; ++j)
          if (!m[i][j].is_zero())
            m[i][j] = exact_div(pivot * m[i][j], prev);
      } else {
        for (int j = stage + 1; j < cols; ++j) {
          Polynomial num = pivot * m[i][j] - m[i][stage] * m[stage][j];
          m[i][j] = num.is_zero() ? Polynomial() : exact_div(num, prev);
        }
        m[i][stage] = Polynomial();
      }
      strip_row_content(m, i, stage + 1);
    }
    prev = pivot;
  }
  return stage;
}

}  // namespace

int symbolic_rank(PolyMatrix m) { return bareiss(m); }

int symbolic_rank(const StructureMatrix& m) {
  return symbolic_rank(m.to_polynomials());
}

Polynomial symbolic_determinant(PolyMatrix m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw DomainError("determinant of a non-square matrix");
  if (n == 0) return Polynomial(1);
  // content stripping would spoil the determinant value, so this variant
  // eliminates without it and tracks the permutation sign
  Polynomial last;
  int sign = 1;
  Polynomial prev(1);
  int stage = 0;
  for (; stage < n; ++stage) {
    Pivot piv;
    if (!find_pivot(m, stage, piv)) break;
    if (piv.row != stage) {
      std::swap(m[piv.row], m[stage]);
      sign = -sign;
    }
    if (piv.col != stage) {
      for (int i = 0; i < n; ++i) std::swap(m[i][piv.col], m[i][stage]);
      sign = -sign;
    }
    const Polynomial& pivot = m[stage][stage];
    for (int i = stage + 1; i < n; ++i) {
      for (int j = stage + 1; j < n; ++j) {
        Polynomial num = pivot * m[i][j] - m[i][stage] * m[stage][j];
        m[i][j] = num.is_zero() ? Polynomial() : exact_div(num, prev);
      }
      m[i][stage] = Polynomial();
    }
    prev = pivot;
    last = pivot;
  }
  if (stage < n) return Polynomial();  // singular
  return sign < 0 ? -last : last;
}

std::vector<int> evaluated_ranks(
    const StructureMatrix& m,
    const std::vector<std::vector<Rational>>& points) {
  std::vector<int> out(points.size(), 0);
  for (std::size_t t = 0; t < points.size(); ++t)
    out[t] = rank(m.evaluated_at(points[t]));
  return out;
}

std::vector<int> evaluated_ranks_parallel(
    const StructureMatrix& m,
    const std::vector<std::vector<Rational>>& points) {
  std::vector<int> out(points.size(), 0);
  const std::int64_t count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < count; ++t)
    out[t] = rank(m.evaluated_at(points[t]));
  return out;
}

RandomizedRankResult randomized_rank(const StructureMatrix& m, int trials,
                                     std::int64_t bound, std::uint64_t seed) {
  const int n = m.dim();
  if (trials < 1) throw DomainError("randomized rank needs trials >= 1");
  if (bound < static_cast<std::int64_t>(n) * n)
    throw DomainError("randomized rank needs bound >= n^2");
  Rng rng(seed);
  std::vector<std::vector<Rational>> points;
  points.reserve(trials);
  for (int t = 0; t < trials; ++t) points.push_back(rng.integer_point(n, bound));

  std::vector<int> ranks = evaluated_ranks_parallel(m, points);
  RandomizedRankResult result;
  result.trials = trials;
  result.bound = bound;
  result.seed = seed;
  for (int t = 0; t < trials; ++t)
    if (ranks[t] > result.rank) {
      result.rank = ranks[t];
      result.witness_point = points[t];
    }
  if (result.witness_point.empty() && !points.empty())
    result.witness_point = points.front();  // zero matrix: any point witnesses
  return result;
}

}  // namespace lieidx
