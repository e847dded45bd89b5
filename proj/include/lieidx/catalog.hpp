#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieidx/regular.hpp"
#include "lieidx/structure_constants.hpp"

namespace lieidx::catalog {

using Params = std::map<std::string, Rational>;

/// Builds the named family member. Throws DomainError for unknown names or
/// parameters outside the family's stated range.
StructureConstants construct(const std::string& name, const Params& params);

struct Entry {
  std::string name;
  Params params;
  StructureConstants algebra;
  std::string status;               // "verified" | "unverified-transcription"
  std::vector<std::string> notes;   // basis shift, transcription remarks
  std::optional<int> expected_index;
  std::string source;

  bool verified() const { return status == "verified"; }
  std::string display_name() const;
};

/// construct + validation; status records whether Jacobi holds.
Entry make_entry(const std::string& name, const Params& params);

struct ParamSchema {
  std::string name;
  std::string parameters;  // human-readable parameter description
  std::string summary;
};

std::vector<ParamSchema> families();

struct Expectation {
  std::string name;
  Params params;
  std::optional<int> expected_index;  // unset: computed value reported only
  std::string source;
  // asserted only when the entry passes validation (garbled transcriptions)
  bool conditional_on_validation = false;
};

/// The machine-readable expectation table: every family at its default
/// acceptance sweep with the published index values.
std::vector<Expectation> expected_results();

struct FamilyExpectation {
  std::string name;
  Params params;
  FunctionalFamily family;
  std::string source;
};

/// Published regular-functional forms, in this library's 1-based
/// coordinates (the quasi-filiform sources use a 0-based basis; the shift
/// is applied here and recorded in the entry notes).
std::vector<FamilyExpectation> expected_regular_families();

std::string params_to_string(const Params& p);

}  // namespace lieidx::catalog
