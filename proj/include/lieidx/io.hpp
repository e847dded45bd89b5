#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lieidx/structure_constants.hpp"

namespace lieidx::io {

struct AlgebraFile {
  StructureConstants algebra;
  std::optional<std::string> name;
  std::optional<std::string> note;
};

/// Grammar: UTF-8 text, '#' comments to end of line; first significant line
/// "dim <n>"; then zero or more "bracket <i> <j> <s> <coeff>" lines meaning
/// C_ij^s = coeff with i < j and coeff an optionally signed integer or a/b.
/// Lines are order-insensitive; duplicate (i,j,s) triples are rejected.
/// "# name: ..." and "# note: ..." comments carry optional metadata.
AlgebraFile parse_algebra(std::istream& in);
AlgebraFile parse_algebra_string(const std::string& text);
AlgebraFile parse_algebra_file(const std::string& path);

/// Canonical re-emission: metadata comments, "dim n", then bracket lines
/// sorted by (i, j, s). Emitting and re-parsing is the identity and the
/// output is byte-stable.
std::string emit_algebra(const StructureConstants& alg,
                         const std::optional<std::string>& name = std::nullopt,
                         const std::optional<std::string>& note = std::nullopt);

}  // namespace lieidx::io
