#pragma once

#include <utility>
#include <vector>

#include "lieidx/index.hpp"
#include "lieidx/structure_constants.hpp"

namespace lieidx {

/// Bracket family [.,.]_t = [.,.]_0 + sum_k t^k [.,.]_k, truncated at finite
/// order. A perturbation tensor reuses the StructureConstants container but
/// is not required to satisfy Jacobi on its own; only the specialized
/// brackets at the sampled t values are validated.
struct Deformation {
  StructureConstants base;
  std::vector<std::pair<int, StructureConstants>> perturbations;  // (degree>=1, tensor)
};

/// Bracket at a concrete parameter value (not validated here).
StructureConstants specialize(const Deformation& def, const Rational& t);

struct DeformationIndexReport {
  int index_at_zero = 0;
  std::vector<std::pair<Rational, int>> sampled;  // (t, index at t)
  int generic_index = 0;                          // min over the samples
  bool monotone = false;  // generic index <= index at t = 0
};

/// Index at t = 0 and at each nonzero sample; every specialization must pass
/// validation, otherwise DomainError names the offending t.
DeformationIndexReport deformation_index(const Deformation& def,
                                         const std::vector<Rational>& t_samples,
                                         const IndexOptions& opts = {});

}  // namespace lieidx
