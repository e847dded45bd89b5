#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lieidx/catalog.hpp"
#include "lieidx/errors.hpp"
#include "lieidx/regular.hpp"
#include "lieidx/rng.hpp"

using namespace lieidx;

namespace {

StructureConstants cat(const std::string& name, int n) {
  return catalog::construct(name, {{"n", Rational(n)}});
}

Functional dual(int n, int s) {
  Functional f(n, Rational(0));
  f[s - 1] = Rational(1);
  return f;
}

bool same_up_to_sign(const Polynomial& a, const Polynomial& b) {
  return a == b || a == -b;
}

}  // namespace

TEST_CASE("evaluated matrix of the dim-3 chain at the top dual vector") {
  QMatrix m = evaluated_matrix(cat("L", 3), dual(3, 3));
  QMatrix expected{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(m[i][j] == Rational(expected[i][j]));
}

TEST_CASE("evaluated matrix at the zero functional vanishes") {
  QMatrix m = evaluated_matrix(cat("Q", 6), Functional(6, Rational(0)));
  for (const auto& row : m)
    for (const auto& c : row) CHECK(c.is_zero());
}

TEST_CASE("evaluated matrix of Q at the top dual vector") {
  QMatrix m = evaluated_matrix(cat("Q", 6), dual(6, 6));
  CHECK(m[1][4] == Rational(-1));
  CHECK(m[2][3] == Rational(1));
  CHECK(m[4][1] == Rational(1));
  CHECK(m[0][1] == Rational(0));
}

TEST_CASE("kernel at a functional") {
  RegularityReport r = kernel_at(cat("L", 5), dual(5, 5));
  CHECK(r.kernel_dim == 3);
  CHECK(r.is_regular);
  CHECK(r.algebra_index == 3);

  RegularityReport z = kernel_at(cat("L", 5), Functional(5, Rational(0)));
  CHECK(z.kernel_dim == 5);
  CHECK_FALSE(z.is_regular);

  RegularityReport q = kernel_at(cat("Q", 6), dual(6, 3));
  CHECK(q.kernel_dim > 2);
  CHECK_FALSE(q.is_regular);
}

TEST_CASE("kernel vectors annihilate the form directly") {
  // independent recheck: v in kernel iff f([v, e_j]) = 0 for every j
  for (const char* name : {"L", "Q"}) {
    StructureConstants alg = cat(name, 6);
    RegularityReport r = find_regular(alg, 404);
    for (const auto& v : r.kernel.basis())
      for (int j = 1; j <= 6; ++j) {
        QVector ej(6, Rational(0));
        ej[j - 1] = Rational(1);
        QVector w = bracket(alg, v, ej);
        Rational pairing(0);
        for (int t = 0; t < 6; ++t) pairing += r.functional[t] * w[t];
        CHECK(pairing.is_zero());
      }
  }
}

TEST_CASE("find_regular on the chain family") {
  RegularityReport r = find_regular(cat("L", 8), 2024);
  CHECK(r.is_regular);
  CHECK(r.kernel_dim == 6);
  bool tail_nonzero = false;
  for (int s = 3; s <= 8; ++s)
    if (!r.functional[s - 1].is_zero()) tail_nonzero = true;
  CHECK(tail_nonzero);
  CHECK(r.attempts >= 1);
}

TEST_CASE("find_regular on the abelian algebra accepts the zero functional") {
  RegularityReport r = find_regular(cat("abelian", 4), 1);
  CHECK(r.is_regular);
  CHECK(r.kernel_dim == 4);
  CHECK(std::all_of(r.functional.begin(), r.functional.end(),
                    [](const Rational& c) { return c.is_zero(); }));
  CHECK(r.attempts == 1);
}

TEST_CASE("find_regular on a terminal entry hits the stated form") {
  StructureConstants t85 =
      catalog::construct("T(n,n-3)", {{"n", Rational(8)}});
  RegularityReport r = find_regular(t85, 5);
  CHECK(r.kernel_dim == 2);
  CHECK(r.is_regular);
}

TEST_CASE("scaling preserves regularity") {
  StructureConstants alg = cat("Q", 8);
  RegularityReport r = find_regular(alg, 31);
  for (long c : {2L, -3L, 7L}) {
    Functional scaled = r.functional;
    for (auto& x : scaled) x *= Rational(c);
    CHECK(kernel_at(alg, scaled).is_regular);
  }
}

TEST_CASE("family verification supports the chain family form") {
  StructureConstants l7 = cat("L", 7);
  FunctionalFamily fam;
  fam.dim = 7;
  fam.free_indices = {1, 2};
  fam.nonzero_sets = {{3, 4, 5, 6, 7}};
  FamilyReport r = verify_family(l7, fam, 20, 808);
  CHECK(r.verdict == FamilyVerdict::Supported);
  CHECK(r.algebra_index == 5);
}

TEST_CASE("family verification refutes a wrong sufficiency claim") {
  // p1 != 0 alone is not regular for the chain algebra
  StructureConstants l5 = cat("L", 5);
  FunctionalFamily fam;
  fam.dim = 5;
  fam.zero_indices = {3, 4, 5};
  fam.free_indices = {1, 2};
  FamilyReport r = verify_family(l5, fam, 10, 5);
  CHECK(r.verdict == FamilyVerdict::RefutedSufficiency);
  CHECK(r.branches.front().counterexample.has_value());
}

TEST_CASE("family verification catches an unnecessary constraint") {
  // claiming p3 must be nonzero for the dim-4 chain is refuted at the
  // boundary: p4 alone already attains the minimal kernel
  StructureConstants l4 = cat("L", 4);
  FunctionalFamily fam;
  fam.dim = 4;
  fam.free_indices = {1, 2, 4};
  fam.nonzero_sets = {{3}};
  FamilyReport r = verify_family(l4, fam, 10, 6);
  CHECK(r.verdict == FamilyVerdict::RefutedNecessitySample);
  CHECK(r.branches.front().boundary_witness.has_value());
}

TEST_CASE("tied groups with unstated nonzero-ness run both branches") {
  StructureConstants f62 = catalog::construct("F6_2", {});
  auto fams = catalog::expected_regular_families();
  auto it = std::find_if(fams.begin(), fams.end(),
                         [](const auto& fe) { return fe.name == "F6_2"; });
  REQUIRE(it != fams.end());
  FamilyReport r = verify_family(f62, it->family, 12, 99);
  CHECK(r.branches.size() == 2);
  CHECK(r.branches[0].label == "tied-nonzero");
  CHECK(r.branches[1].label == "tied-zero");
}

TEST_CASE("regular-set minors of the small chain algebras") {
  // dim 3: the single nonzero 2x2 minor is p3^2 up to sign
  auto minors3 = regular_set_minors(cat("L", 3));
  REQUIRE(minors3.size() == 1);
  Polynomial p3sq = Polynomial::variable(3) * Polynomial::variable(3);
  CHECK(same_up_to_sign(minors3[0], p3sq));

  // dim 4: the minors generate the condition p3 != 0 or p4 != 0
  auto minors4 = regular_set_minors(cat("L", 4));
  Polynomial p3 = Polynomial::variable(3), p4 = Polynomial::variable(4);
  REQUIRE(minors4.size() == 3);
  for (const auto& target : {p3 * p3, p3 * p4, p4 * p4}) {
    bool found = false;
    for (const auto& m : minors4)
      if (same_up_to_sign(m, target)) found = true;
    CHECK(found);
  }

  CHECK(regular_set_minors(cat("abelian", 5)).empty());
}

TEST_CASE("minors characterize regularity exactly") {
  for (const char* name : {"L", "Q"}) {
    StructureConstants alg = cat(name, 6);
    auto minors = regular_set_minors(alg);
    Rng rng(1234);
    for (int t = 0; t < 50; ++t) {
      Functional f = rng.integer_point(6, 99);
      bool some_nonzero = false;
      for (const auto& m : minors)
        if (!m.eval(f).is_zero()) {
          some_nonzero = true;
          break;
        }
      CHECK(kernel_at(alg, f).is_regular == some_nonzero);
    }
  }
}

TEST_CASE("extension functionals stay regular") {
  // a regular g on the base extends to g + rho c* on the central extension
  for (const char* name : {"L", "Q"}) {
    StructureConstants alg = cat(name, 6);
    StructureConstants ext = direct_sum_with_abelian(alg, 1);
    RegularityReport g = find_regular(alg, 7);
    for (long rho : {0L, 1L, -2L}) {
      Functional f = g.functional;
      f.emplace_back(rho);
      CHECK(kernel_at(ext, f).is_regular);
    }
  }
}

TEST_CASE("kernel dimension never goes below the index") {
  Rng rng(606);
  for (const char* name : {"L", "Q"}) {
    StructureConstants alg = cat(name, 6);
    int chi = kernel_at(alg, dual(6, 6)).algebra_index;
    for (int t = 0; t < 25; ++t) {
      Functional f = rng.integer_point(6, 99);
      CHECK(kernel_at_with_index(alg, f, chi).kernel_dim >= chi);
    }
  }
}

TEST_CASE("search exhaustion is reported") {
  // one attempt only: the zero functional is not regular on the chain
  CHECK_THROWS_AS(find_regular(cat("L", 5), 1, 1), DomainError);
}

TEST_CASE("minor guard refuses oversized enumerations") {
  // five Heisenberg summands: dim 15, rank 10, C(15,10)^2 combinations
  StructureConstants heis5(15);
  for (int b = 0; b < 5; ++b) heis5.add(3 * b + 1, 3 * b + 2, 3 * b + 3, 1);
  CHECK_THROWS_AS(regular_set_minors(heis5), DomainError);
}
