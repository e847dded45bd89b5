#include "lieidx/deformation.hpp"

#include <algorithm>

#include "lieidx/errors.hpp"

namespace lieidx {

StructureConstants specialize(const Deformation& def, const Rational& t) {
  StructureConstants out = def.base;
  for (const auto& [degree, tensor] : def.perturbations) {
    if (tensor.dim() != def.base.dim())
      throw DomainError("perturbation dimension does not match the base");
    if (degree < 1) throw DomainError("perturbation degree must be >= 1");
    const Rational tk = t.pow(degree);
    if (tk.is_zero()) continue;
    for (const auto& [i, j, s, c] : tensor.entries()) out.add(i, j, s, c * tk);
  }
  return out;
}

DeformationIndexReport deformation_index(const Deformation& def,
                                         const std::vector<Rational>& t_samples,
                                         const IndexOptions& opts) {
  if (t_samples.empty())
    throw DomainError("deformation index needs at least one sample");
  auto checked_index = [&](const Rational& t) {
    StructureConstants at = specialize(def, t);
    if (!validate(at).ok())
      throw DomainError("specialization at t = " + t.str() +
                        " is not a Lie bracket");
    return index(at, opts).index;
  };

  DeformationIndexReport report;
  report.index_at_zero = checked_index(Rational(0));
  int generic = -1;
  for (const Rational& t : t_samples) {
    if (t.is_zero())
      throw DomainError("deformation samples must be nonzero");
    int chi = checked_index(t);
    report.sampled.emplace_back(t, chi);
    generic = generic < 0 ? chi : std::min(generic, chi);
  }
  report.generic_index = generic;
  report.monotone = report.generic_index <= report.index_at_zero;
  return report;
}

}  // namespace lieidx
