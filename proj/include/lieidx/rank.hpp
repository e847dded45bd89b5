#pragma once

#include <cstdint>
#include <vector>

#include "lieidx/polynomial.hpp"
#include "lieidx/rng.hpp"
#include "lieidx/structure_matrix.hpp"

namespace lieidx {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Exact rank over the fraction field of the polynomial ring, by
/// fraction-free Bareiss elimination with exact divisions. Pivots are chosen
/// as the nonzero entry minimizing (total degree, term count, row, column),
/// and each updated row is divided by its integer content, which keeps
/// coefficient growth down without changing the rank.
int symbolic_rank(PolyMatrix m);
int symbolic_rank(const StructureMatrix& m);

/// Fraction-free determinant of a square polynomial matrix (the final
/// Bareiss pivot; zero when elimination dies early).
Polynomial symbolic_determinant(PolyMatrix m);

/// Exact ranks of M evaluated at each point. Serial reference version.
std::vector<int> evaluated_ranks(const StructureMatrix& m,
                                 const std::vector<std::vector<Rational>>& points);

/// Same results, trials distributed across OpenMP threads.
std::vector<int> evaluated_ranks_parallel(
    const StructureMatrix& m,
    const std::vector<std::vector<Rational>>& points);

struct RandomizedRankResult {
  int rank = 0;
  std::vector<Rational> witness_point;  // a point attaining the max rank
  int trials = 0;
  std::int64_t bound = 0;
  std::uint64_t seed = 0;
};

/// Max over `trials` of the exact rank of M at integer points uniform in
/// [-bound, bound]^n. Always <= the symbolic rank; equal except when every
/// sampled point hits the zero set of the maximal nonzero minor, which has
/// probability <= (n / (2*bound + 1))^trials.
RandomizedRankResult randomized_rank(const StructureMatrix& m, int trials,
                                     std::int64_t bound, std::uint64_t seed);

}  // namespace lieidx
