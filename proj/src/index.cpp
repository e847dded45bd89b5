#include "lieidx/index.hpp"

#include "lieidx/errors.hpp"

namespace lieidx {

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::Symbolic: return "symbolic";
    case RankMethod::Randomized: return "randomized";
    case RankMethod::Both: return "both";
  }
  return "?";
}

IndexReport index(const StructureConstants& alg, const IndexOptions& opts) {
  ValidationReport v = validate(alg);
  if (!v.ok())
    throw DomainError("index of an invalid algebra: " +
                      std::to_string(v.violations.size()) +
                      " Jacobi violation(s), first at (" +
                      std::to_string(v.violations[0].i) + "," +
                      std::to_string(v.violations[0].j) + "," +
                      std::to_string(v.violations[0].k) + ")");

  const int n = alg.dim();
  StructureMatrix m(alg);
  IndexReport report;
  report.method = opts.method;

  int rk = -1;
  if (opts.method == RankMethod::Symbolic || opts.method == RankMethod::Both)
    rk = symbolic_rank(m);
  if (opts.method == RankMethod::Randomized || opts.method == RankMethod::Both) {
    std::int64_t bound =
        std::max<std::int64_t>(opts.bound, static_cast<std::int64_t>(n) * n);
    RandomizedRankResult rr = randomized_rank(m, opts.trials, bound, opts.seed);
    if (opts.method == RankMethod::Both && rr.rank != rk)
      throw InternalError("rank disagreement: symbolic " + std::to_string(rk) +
                          " vs randomized " + std::to_string(rr.rank));
    if (opts.method == RankMethod::Randomized) rk = rr.rank;
    report.witness_point = rr.witness_point;
    report.trials = rr.trials;
    report.bound = rr.bound;
    report.seed = rr.seed;
  }

  if (rk % 2 != 0)
    throw InternalError("skew-symmetric structure matrix produced odd rank " +
                        std::to_string(rk));
  report.rank = rk;
  report.index = n - rk;
  return report;
}

bool is_frobenius(const StructureConstants& alg) {
  IndexOptions opts;
  opts.method = RankMethod::Symbolic;
  return index(alg, opts).index == 0;
}

std::pair<int, int> central_extension_index_check(
    const StructureConstants& alg) {
  IndexOptions opts;
  opts.method = RankMethod::Symbolic;
  const int base = index(alg, opts).index;
  const int extended = index(direct_sum_with_abelian(alg, 1), opts).index;
  if (extended != base + 1)
    throw InternalError("central extension shifted the index from " +
                        std::to_string(base) + " to " +
                        std::to_string(extended) +
                        " instead of adding one");
  return {base, extended};
}

}  // namespace lieidx
