#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieidx/index.hpp"
#include "lieidx/structure_constants.hpp"

namespace lieidx {

/// Covector p representing f = sum_s p_s x_s*.
using Functional = std::vector<Rational>;

/// Rational matrix M(p) with entry (i, j) = sum_s p_s C_ij^s.
QMatrix evaluated_matrix(const StructureConstants& alg, const Functional& f);

struct RegularityReport {
  Functional functional;
  int kernel_dim = 0;
  Subspace kernel;
  bool is_regular = false;
  int algebra_index = 0;
  int attempts = 0;  // set by find_regular
};

/// Kernel of M(p) in reduced echelon form; f is regular iff the kernel
/// dimension equals the index of the algebra.
RegularityReport kernel_at(const StructureConstants& alg, const Functional& f);

/// Like kernel_at with the index already known (skips recomputation inside
/// sampling loops).
RegularityReport kernel_at_with_index(const StructureConstants& alg,
                                      const Functional& f, int algebra_index);

/// Searches for a certified regular functional: the zero functional, then
/// single dual-basis vectors, then pairs, then random integer functionals
/// with entries in [-99, 99]. Throws DomainError when max_attempts runs out.
RegularityReport find_regular(const StructureConstants& alg,
                              std::uint64_t seed, int max_attempts = 500);

/// Parametric family of functionals from the catalog's regular-vector
/// tables: free coordinates, forced-zero coordinates, sets requiring at
/// least one nonzero member, and groups of coordinates sharing one value.
struct TiedGroup {
  std::vector<int> indices;
  // true: the shared value must be nonzero; false: unconstrained; the
  // source tables sometimes leave this unstated, in which case verification
  // runs both the nonzero and the zero branch and reports each.
  std::optional<bool> require_nonzero;
};

struct FunctionalFamily {
  int dim = 0;
  std::vector<int> free_indices;
  std::vector<int> zero_indices;
  std::vector<std::vector<int>> nonzero_sets;
  std::vector<TiedGroup> tied_groups;
  std::vector<std::string> notes;

  std::string str() const;
};

enum class FamilyVerdict { Supported, RefutedSufficiency, RefutedNecessitySample };

std::string to_string(FamilyVerdict v);

struct FamilyBranchResult {
  std::string label;
  FamilyVerdict verdict = FamilyVerdict::Supported;
  std::optional<Functional> counterexample;   // non-regular family member
  std::optional<Functional> boundary_witness; // regular despite a violated set
  std::optional<std::vector<int>> refuted_set;
};

struct FamilyReport {
  FunctionalFamily family;
  int algebra_index = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  FamilyVerdict verdict = FamilyVerdict::Supported;  // of the primary branch
  std::vector<FamilyBranchResult> branches;
  std::vector<std::string> notes;
};

/// Sampling verification of a family: `samples` random members (all
/// non-forced coordinates drawn nonzero from +-1..+-99, ties honored) must
/// be regular, and for each nonzero-set, `samples` functionals with that set
/// forced to zero must be non-regular. Ties with unstated nonzero-ness run
/// as two branches.
FamilyReport verify_family(const StructureConstants& alg,
                           const FunctionalFamily& fam, int samples,
                           std::uint64_t seed);

/// Parallel twin of the sampling loop inside verify_family; identical
/// results for identical seeds.
FamilyReport verify_family_parallel(const StructureConstants& alg,
                                    const FunctionalFamily& fam, int samples,
                                    std::uint64_t seed);

/// All (n - index) x (n - index) minors of M(p) that are not identically
/// zero, as polynomials in p_1..p_n (duplicates removed). A functional is
/// regular exactly when one of them is nonzero at it. Guarded: throws
/// DomainError when C(n, n - index)^2 exceeds 10^6.
std::vector<Polynomial> regular_set_minors(const StructureConstants& alg);

}  // namespace lieidx
