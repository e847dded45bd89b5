#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieidx/rank.hpp"
#include "lieidx/structure_constants.hpp"

namespace lieidx {

enum class RankMethod { Symbolic, Randomized, Both };

std::string to_string(RankMethod m);

struct IndexReport {
  int index = 0;
  int rank = 0;
  RankMethod method = RankMethod::Both;
  std::optional<std::vector<Rational>> witness_point;  // from the random path
  int trials = 0;           // randomized certification, when applicable
  std::int64_t bound = 0;
  std::uint64_t seed = 0;
};

struct IndexOptions {
  RankMethod method = RankMethod::Both;
  int trials = 3;
  std::int64_t bound = 1 << 16;
  std::uint64_t seed = 12345;
};

/// Index = dim - rank of the symbolic structure matrix. The symbolic rank is
/// authoritative; the randomized rank is a fast path and cross-check, and
/// with method Both any disagreement throws InternalError rather than being
/// resolved silently. Throws DomainError when the tensor fails validation.
IndexReport index(const StructureConstants& alg, const IndexOptions& opts = {});

/// Index 0, i.e. some evaluated structure matrix is nondegenerate.
bool is_frobenius(const StructureConstants& alg);

/// (index of alg, index of alg + one central line). The second is checked to
/// be the first plus one; a mismatch throws InternalError.
std::pair<int, int> central_extension_index_check(const StructureConstants& alg);

}  // namespace lieidx
