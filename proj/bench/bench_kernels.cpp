// Compares the serial reference kernels against their OpenMP versions:
// evaluated-rank trials and family-verification sampling.

#include <chrono>
#include <cstdio>

#include "lieidx/catalog.hpp"
#include "lieidx/rank.hpp"
#include "lieidx/regular.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace lieidx;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double time_it(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return seconds(t0, t1);
}

void bench_rank_trials(const char* label, const StructureConstants& alg,
                       int trials) {
  StructureMatrix m(alg);
  Rng rng(2024);
  std::vector<std::vector<Rational>> points;
  for (int t = 0; t < trials; ++t)
    points.push_back(rng.integer_point(m.dim(), 1 << 16));

  std::vector<int> serial, parallel;
  double ts = time_it([&] { serial = evaluated_ranks(m, points); });
  double tp = time_it([&] { parallel = evaluated_ranks_parallel(m, points); });
  bool same = serial == parallel;
  std::printf("%-28s trials=%-4d serial %8.3fs   omp %8.3fs   speedup %5.2fx  %s\n",
              label, trials, ts, tp, ts / tp, same ? "match" : "MISMATCH");
}

void bench_family(const char* label, const StructureConstants& alg,
                  const FunctionalFamily& fam, int samples) {
  FamilyReport rs, rp;
  double ts = time_it([&] { rs = verify_family(alg, fam, samples, 77); });
  double tp =
      time_it([&] { rp = verify_family_parallel(alg, fam, samples, 77); });
  bool same = rs.verdict == rp.verdict;
  std::printf("%-28s samples=%-3d serial %8.3fs   omp %8.3fs   speedup %5.2fx  %s\n",
              label, samples, ts, tp, ts / tp, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif

  bench_rank_trials("rank trials Q(10)",
                    catalog::construct("Q", {{"n", Rational(10)}}), 256);
  bench_rank_trials("rank trials Q(12)",
                    catalog::construct("Q", {{"n", Rational(12)}}), 128);
  bench_rank_trials("rank trials tau(2n+1) n=5",
                    catalog::construct("tau(2n+1,lam2)",
                                       {{"n", Rational(5)}, {"lam2", Rational(1)}}),
                    128);

  {
    StructureConstants q8 = catalog::construct("Q", {{"n", Rational(8)}});
    FunctionalFamily fam;
    fam.dim = 8;
    for (int i = 1; i <= 8; ++i) fam.free_indices.push_back(i);
    fam.nonzero_sets = {{8}};
    bench_family("family sampling Q(8)", q8, fam, 256);
  }
  return 0;
}
