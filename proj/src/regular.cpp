#include "lieidx/regular.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lieidx/errors.hpp"
#include "lieidx/rng.hpp"
#include "lieidx/structure_matrix.hpp"

namespace lieidx {

QMatrix evaluated_matrix(const StructureConstants& alg, const Functional& f) {
  return StructureMatrix(alg).evaluated_at(f);
}

RegularityReport kernel_at_with_index(const StructureConstants& alg,
                                      const Functional& f, int algebra_index) {
  const int n = alg.dim();
  if (static_cast<int>(f.size()) != n)
    throw DomainError("functional dimension does not match the algebra");
  QMatrix m = evaluated_matrix(alg, f);
  QMatrix ker = kernel_basis(m);
  RegularityReport r;
  r.functional = f;
  r.kernel = ker.empty() ? Subspace::zero(n) : Subspace(ker, n);
  r.kernel_dim = r.kernel.dim();
  r.algebra_index = algebra_index;
  r.is_regular = r.kernel_dim == algebra_index;
  return r;
}

RegularityReport kernel_at(const StructureConstants& alg, const Functional& f) {
  IndexOptions opts;
  opts.method = RankMethod::Symbolic;
  return kernel_at_with_index(alg, f, index(alg, opts).index);
}

RegularityReport find_regular(const StructureConstants& alg,
                              std::uint64_t seed, int max_attempts) {
  const int n = alg.dim();
  IndexOptions opts;
  opts.method = RankMethod::Symbolic;
  const int chi = index(alg, opts).index;

  std::vector<Functional> sparse;
  sparse.emplace_back(n, Rational(0));  // the zero functional
  for (int s = 1; s <= n; ++s) {
    Functional f(n, Rational(0));
    f[s - 1] = Rational(1);
    sparse.push_back(std::move(f));
  }
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t) {
      Functional f(n, Rational(0));
      f[s - 1] = Rational(1);
      f[t - 1] = Rational(1);
      sparse.push_back(std::move(f));
    }

  Rng rng(seed);
  int attempts = 0;
  auto try_one = [&](const Functional& f) -> std::optional<RegularityReport> {
    ++attempts;
    RegularityReport r = kernel_at_with_index(alg, f, chi);
    if (!r.is_regular) return std::nullopt;
    r.attempts = attempts;
    return r;
  };

  for (const auto& f : sparse) {
    if (attempts >= max_attempts) break;
    if (auto r = try_one(f)) return *r;
  }
  while (attempts < max_attempts) {
    if (auto r = try_one(rng.integer_point(n, 99))) return *r;
  }
  throw DomainError("no regular functional found in " +
                    std::to_string(max_attempts) +
                    " attempts; either extreme bad luck or an index bug");
}

std::string FunctionalFamily::str() const {
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  std::string s;
  if (!free_indices.empty()) s += "free=" + list(free_indices);
  if (!zero_indices.empty()) {
    if (!s.empty()) s += ";";
    s += "zero=" + list(zero_indices);
  }
  if (!nonzero_sets.empty()) {
    if (!s.empty()) s += ";";
    s += "nonzero=";
    for (std::size_t i = 0; i < nonzero_sets.size(); ++i) {
      if (i) s += ",";
      for (std::size_t j = 0; j < nonzero_sets[i].size(); ++j)
        s += (j ? "+" : "") + std::to_string(nonzero_sets[i][j]);
    }
  }
  for (const auto& g : tied_groups) {
    if (!s.empty()) s += ";";
    s += "tied=";
    for (std::size_t j = 0; j < g.indices.size(); ++j)
      s += (j ? "+" : "") + std::to_string(g.indices[j]);
    if (g.require_nonzero.has_value())
      s += *g.require_nonzero ? "(nonzero)" : "(any)";
  }
  return s.empty() ? "all free" : s;
}

std::string to_string(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::Supported: return "supported";
    case FamilyVerdict::RefutedSufficiency: return "refuted-sufficiency";
    case FamilyVerdict::RefutedNecessitySample:
      return "refuted-necessity-sample";
  }
  return "?";
}

namespace {

void check_family(const FunctionalFamily& fam) {
  auto in_range = [&](int i) { return i >= 1 && i <= fam.dim; };
  for (int i : fam.free_indices)
    if (!in_range(i)) throw DomainError("family index out of range");
  for (int i : fam.zero_indices)
    if (!in_range(i)) throw DomainError("family index out of range");
  for (const auto& s : fam.nonzero_sets) {
    if (s.empty()) throw DomainError("empty nonzero-constraint set");
    for (int i : s)
      if (!in_range(i)) throw DomainError("family index out of range");
  }
  for (const auto& g : fam.tied_groups)
    for (int i : g.indices)
      if (!in_range(i)) throw DomainError("family index out of range");
}

// A family member: every coordinate not forced to zero gets a nonzero draw
// from +-1..+-99; tied groups share one value (zero in the zero branch).
Functional sample_member(const FunctionalFamily& fam, Rng& rng,
                         bool tied_zero_branch,
                         const std::vector<int>* violated_set) {
  Functional f(fam.dim, Rational(0));
  std::vector<bool> assigned(fam.dim + 1, false);
  for (int i : fam.zero_indices) assigned[i] = true;  // stays zero
  for (const auto& g : fam.tied_groups) {
    bool zero = tied_zero_branch && !g.require_nonzero.value_or(false);
    Rational v = zero ? Rational(0)
                      : Rational(static_cast<long>(rng.nonzero_int(99)));
    for (int i : g.indices) {
      f[i - 1] = v;
      assigned[i] = true;
    }
  }
  for (int i = 1; i <= fam.dim; ++i) {
    if (assigned[i]) continue;
    f[i - 1] = Rational(static_cast<long>(rng.nonzero_int(99)));
  }
  if (violated_set)
    for (int i : *violated_set) f[i - 1] = Rational(0);
  return f;
}

FamilyBranchResult run_branch(const StructureConstants& alg,
                              const FunctionalFamily& fam, int samples,
                              Rng& rng, int chi, bool tied_zero_branch,
                              bool parallel, const std::string& label) {
  FamilyBranchResult out;
  out.label = label;

  std::vector<Functional> members;
  members.reserve(samples);
  for (int t = 0; t < samples; ++t)
    members.push_back(sample_member(fam, rng, tied_zero_branch, nullptr));

  struct BoundaryCase {
    std::size_t set_index;
    Functional f;
  };
  std::vector<BoundaryCase> boundary;
  for (std::size_t s = 0; s < fam.nonzero_sets.size(); ++s)
    for (int t = 0; t < samples; ++t)
      boundary.push_back(
          {s, sample_member(fam, rng, tied_zero_branch, &fam.nonzero_sets[s])});

  std::vector<char> member_regular(members.size(), 0);
  std::vector<char> boundary_regular(boundary.size(), 0);
  auto eval_member = [&](std::size_t t) {
    member_regular[t] =
        kernel_at_with_index(alg, members[t], chi).is_regular ? 1 : 0;
  };
  auto eval_boundary = [&](std::size_t t) {
    boundary_regular[t] =
        kernel_at_with_index(alg, boundary[t].f, chi).is_regular ? 1 : 0;
  };
  if (parallel) {
    const std::int64_t nm = static_cast<std::int64_t>(members.size());
    const std::int64_t nb = static_cast<std::int64_t>(boundary.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < nm; ++t) eval_member(t);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < nb; ++t) eval_boundary(t);
  } else {
    for (std::size_t t = 0; t < members.size(); ++t) eval_member(t);
    for (std::size_t t = 0; t < boundary.size(); ++t) eval_boundary(t);
  }

  for (std::size_t t = 0; t < members.size(); ++t)
    if (!member_regular[t]) {
      out.verdict = FamilyVerdict::RefutedSufficiency;
      out.counterexample = members[t];
      return out;
    }
  for (std::size_t t = 0; t < boundary.size(); ++t)
    if (boundary_regular[t]) {
      out.verdict = FamilyVerdict::RefutedNecessitySample;
      out.boundary_witness = boundary[t].f;
      out.refuted_set = fam.nonzero_sets[boundary[t].set_index];
      return out;
    }
  out.verdict = FamilyVerdict::Supported;
  return out;
}

FamilyReport verify_family_impl(const StructureConstants& alg,
                                const FunctionalFamily& fam, int samples,
                                std::uint64_t seed, bool parallel) {
  if (fam.dim != alg.dim())
    throw DomainError("family dimension does not match the algebra");
  check_family(fam);
  IndexOptions opts;
  opts.method = RankMethod::Symbolic;
  const int chi = index(alg, opts).index;

  FamilyReport report;
  report.family = fam;
  report.algebra_index = chi;
  report.samples = samples;
  report.seed = seed;
  report.notes = fam.notes;

  Rng rng(seed);
  report.branches.push_back(run_branch(alg, fam, samples, rng, chi,
                                       /*tied_zero_branch=*/false, parallel,
                                       "tied-nonzero"));
  bool unstated_tie = std::any_of(
      fam.tied_groups.begin(), fam.tied_groups.end(),
      [](const TiedGroup& g) { return !g.require_nonzero.has_value(); });
  if (unstated_tie) {
    Rng rng2 = rng.fork(1);
    report.branches.push_back(run_branch(alg, fam, samples, rng2, chi,
                                         /*tied_zero_branch=*/true, parallel,
                                         "tied-zero"));
    report.notes.push_back(
        "tied parameter nonzero-ness unstated; both branches reported, "
        "verdict taken from the tied-nonzero branch");
  }
  report.verdict = report.branches.front().verdict;
  return report;
}

}  // namespace

FamilyReport verify_family(const StructureConstants& alg,
                           const FunctionalFamily& fam, int samples,
                           std::uint64_t seed) {
  return verify_family_impl(alg, fam, samples, seed, false);
}

FamilyReport verify_family_parallel(const StructureConstants& alg,
                                    const FunctionalFamily& fam, int samples,
                                    std::uint64_t seed) {
  return verify_family_impl(alg, fam, samples, seed, true);
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 2'000'000'000LL) return r;  // saturate well past the guard
  }
  return r;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Polynomial> regular_set_minors(const StructureConstants& alg) {
  const int n = alg.dim();
  IndexOptions opts;
  opts.method = RankMethod::Symbolic;
  const int chi = index(alg, opts).index;
  const int r = n - chi;
  if (r == 0) return {};  // rank zero: every functional is regular

  const long long combos = binomial(n, r);
  if (combos * combos > 1'000'000LL)
    throw DomainError("minor enumeration guard: C(" + std::to_string(n) +
                      "," + std::to_string(r) + ")^2 exceeds 10^6");

  PolyMatrix m = StructureMatrix(alg).to_polynomials();
  std::vector<std::vector<int>> row_sets;
  combinations(n, r, [&](const std::vector<int>& c) { row_sets.push_back(c); });

  const std::int64_t k = static_cast<std::int64_t>(row_sets.size());
  std::vector<Polynomial> dets(k * k);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < k * k; ++idx) {
    const auto& rows = row_sets[idx / k];
    const auto& cols = row_sets[idx % k];
    PolyMatrix sub(r, std::vector<Polynomial>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sub[i][j] = m[rows[i]][cols[j]];
    dets[idx] = symbolic_determinant(std::move(sub));
  }

  std::vector<Polynomial> minors;
  std::set<std::string> seen;
  for (auto& det : dets) {
    if (det.is_zero()) continue;
    if (seen.insert(det.str()).second) minors.push_back(std::move(det));
  }
  return minors;
}

}  // namespace lieidx
