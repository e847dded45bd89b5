#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lieidx/rational.hpp"

namespace lieidx {

/// Deterministic random source. std::mt19937_64 is fully specified by the
/// standard; the range reductions below avoid std::uniform_int_distribution,
/// whose output is implementation-defined, so a fixed seed gives identical
/// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform integer in [lo, hi], inclusive, by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform nonzero integer with 1 <= |value| <= bound.
  std::int64_t nonzero_int(std::int64_t bound) {
    std::int64_t v = uniform_int(1, bound);
    return uniform_int(0, 1) ? v : -v;
  }

  /// Integer vector with entries uniform in [-bound, bound].
  std::vector<Rational> integer_point(int n, std::int64_t bound) {
    std::vector<Rational> p;
    p.reserve(n);
    for (int i = 0; i < n; ++i)
      p.emplace_back(static_cast<long>(uniform_int(-bound, bound)));
    return p;
  }

  /// Child generator with a tag-dependent seed; lets independent work items
  /// draw reproducibly no matter the order they run in.
  Rng fork(std::uint64_t tag) const {
    std::uint64_t s = seed_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
    s ^= s >> 31;
    return Rng(s * 0xbf58476d1ce4e5b9ULL + tag);
  }

 private:
  std::mt19937_64 eng_;
  std::uint64_t seed_;
};

}  // namespace lieidx
