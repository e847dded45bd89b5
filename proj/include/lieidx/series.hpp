#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lieidx/structure_constants.hpp"

namespace lieidx {

/// C^0 = G, C^{k+1} = [C^k, G], listed until the first repeated term
/// (the fixed point). Nilpotent iff the last term is zero.
std::vector<Subspace> lower_central_series(const StructureConstants& alg);

/// Smallest p with C^p = 0, or nullopt when the series stabilizes above zero.
std::optional<int> nilindex(const StructureConstants& alg);

bool is_nilpotent(const StructureConstants& alg);

/// {x : [x, y] = 0 for all y}, the kernel of the stacked ad matrices.
Subspace center(const StructureConstants& alg);

/// Decreasing Jordan block sizes of ad x for x outside [G, G], maximized
/// lexicographically over all basis vectors plus `samples` random integer
/// vectors. The supremum is attained on a dense open set, so the sampled
/// value equals the true one with probability 1; the flag records that the
/// result came from sampling.
struct CharacteristicSequence {
  std::vector<int> parts;  // decreasing, sums to dim
  int samples;
  std::uint64_t seed;
};

CharacteristicSequence characteristic_sequence(const StructureConstants& alg,
                                               int samples,
                                               std::uint64_t seed);

/// Nilpotent with maximal nilindex n - 1.
bool is_filiform(const StructureConstants& alg);

/// Nilpotent with C^{n-3} != 0 and C^{n-2} = 0.
bool is_quasi_filiform(const StructureConstants& alg);

}  // namespace lieidx
