#include "lieidx/series.hpp"

#include <algorithm>

#include "lieidx/errors.hpp"
#include "lieidx/rng.hpp"

namespace lieidx {

std::vector<Subspace> lower_central_series(const StructureConstants& alg) {
  const int n = alg.dim();
  std::vector<Subspace> series{Subspace::whole_space(n)};
  while (true) {
    const Subspace& prev = series.back();
    QMatrix spanning;
    for (const auto& v : prev.basis())
      for (int j = 1; j <= n; ++j) {
        QVector w(n, Rational(0));
        for (int i = 1; i <= n; ++i) {
          if (v[i - 1].is_zero() || i == j) continue;
          for (const auto& [s, c] : alg.bracket_basis(i, j))
            w[s - 1] += v[i - 1] * c;
        }
        spanning.push_back(std::move(w));
      }
    Subspace next(spanning, n);
    if (next.dim() == prev.dim()) break;  // fixed point reached
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

std::optional<int> nilindex(const StructureConstants& alg) {
  auto series = lower_central_series(alg);
  if (series.back().dim() != 0) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool is_nilpotent(const StructureConstants& alg) {
  return nilindex(alg).has_value();
}

Subspace center(const StructureConstants& alg) {
  const int n = alg.dim();
  // row (j, t): sum_i x_i C_ij^t = 0
  QMatrix stacked;
  stacked.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 1; j <= n; ++j)
    for (int t = 1; t <= n; ++t) {
      QVector row(n, Rational(0));
      bool nonzero = false;
      for (int i = 1; i <= n; ++i) {
        Rational c = alg.coeff(i, j, t);
        if (!c.is_zero()) {
          row[i - 1] = c;
          nonzero = true;
        }
      }
      if (nonzero) stacked.push_back(std::move(row));
    }
  if (stacked.empty()) return Subspace::whole_space(n);
  return Subspace(kernel_basis(stacked), n);
}

namespace {

// Jordan block sizes of a nilpotent matrix, decreasing, from the rank
// sequence of its powers: #blocks of size >= k is rank(A^{k-1}) - rank(A^k).
std::vector<int> jordan_sizes(const QMatrix& a, int n) {
  std::vector<int> ranks{n};
  QMatrix power = a;
  while (ranks.back() != 0) {
    int r = rank(power);
    if (r == ranks.back() && r != 0)
      throw DomainError("ad x is not nilpotent");
    ranks.push_back(r);
    if (r == 0) break;
    power = matmul(power, a);
  }
  std::vector<int> parts;
  const int depth = static_cast<int>(ranks.size()) - 1;
  for (int k = 1; k <= depth; ++k) {
    int at_least_k = ranks[k - 1] - ranks[k];
    int at_least_k1 = k < depth ? ranks[k] - ranks[k + 1] : 0;
    for (int b = 0; b < at_least_k - at_least_k1; ++b) parts.push_back(k);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

CharacteristicSequence characteristic_sequence(const StructureConstants& alg,
                                               int samples,
                                               std::uint64_t seed) {
  const int n = alg.dim();
  if (!is_nilpotent(alg))
    throw DomainError("characteristic sequence requires a nilpotent algebra");
  auto series = lower_central_series(alg);
  const Subspace& derived = series.size() > 1 ? series[1] : Subspace::zero(n);

  std::vector<QVector> candidates;
  for (int i = 1; i <= n; ++i) {
    QVector e(n, Rational(0));
    e[i - 1] = Rational(1);
    if (!derived.contains(e)) candidates.push_back(std::move(e));
  }
  Rng rng(seed);
  int produced = 0;
  int guard = 0;
  while (produced < samples && guard < 100 * (samples + 1)) {
    ++guard;
    QVector v = rng.integer_point(n, 99);
    bool zero = std::all_of(v.begin(), v.end(),
                            [](const Rational& x) { return x.is_zero(); });
    if (zero || derived.contains(v)) continue;
    candidates.push_back(std::move(v));
    ++produced;
  }

  std::vector<int> best;
  for (const auto& x : candidates) {
    std::vector<int> c = jordan_sizes(ad_matrix(alg, x), n);
    if (best.empty() || std::lexicographical_compare(best.begin(), best.end(),
                                                     c.begin(), c.end()))
      best = std::move(c);
  }
  if (best.empty())
    throw DomainError("no candidate vector outside the derived subalgebra");
  return {best, samples, seed};
}

bool is_filiform(const StructureConstants& alg) {
  auto p = nilindex(alg);
  if (!p) throw DomainError("filiform test requires a nilpotent algebra");
  return *p == alg.dim() - 1;
}

bool is_quasi_filiform(const StructureConstants& alg) {
  const int n = alg.dim();
  auto series = lower_central_series(alg);
  if (series.back().dim() != 0)
    throw DomainError("quasi-filiform test requires a nilpotent algebra");
  auto term_dim = [&](int k) {
    if (k < 0) return n;
    if (k < static_cast<int>(series.size())) return series[k].dim();
    return 0;  // past the fixed point the series is zero
  };
  return term_dim(n - 3) != 0 && term_dim(n - 2) == 0;
}

}  // namespace lieidx
