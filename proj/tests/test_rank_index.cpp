#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "lieidx/catalog.hpp"
#include "lieidx/deformation.hpp"
#include "lieidx/errors.hpp"
#include "lieidx/index.hpp"
#include "lieidx/rank.hpp"
#include "lieidx/rng.hpp"

using namespace lieidx;

namespace {

StructureConstants cat(const std::string& name, int n) {
  return catalog::construct(name, {{"n", Rational(n)}});
}

// cofactor-expansion determinant: an oracle independent of the elimination
// path used by the library
Polynomial cofactor_det(const PolyMatrix& m, std::vector<int> rows,
                        std::vector<int> cols) {
  const std::size_t k = rows.size();
  if (k == 1) return m[rows[0]][cols[0]];
  Polynomial det;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    if (m[rows[0]][cols[c]].is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t t = 0; t < k; ++t)
      if (t != c) sub_cols.push_back(cols[t]);
    Polynomial minor = cofactor_det(m, sub_rows, sub_cols);
    Polynomial term = m[rows[0]][cols[c]] * minor;
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

void combos(int n, int k, std::vector<int>& cur,
            const std::function<bool(const std::vector<int>&)>& fn, int from) {
  if (static_cast<int>(cur.size()) == k) {
    fn(cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    combos(n, k, cur, fn, i + 1);
    cur.pop_back();
  }
}

// largest k with a nonzero k x k minor, by brute-force enumeration
int minor_rank_oracle(const PolyMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (int k = n; k >= 1; --k) {
    bool found = false;
    std::vector<int> cur;
    combos(n, k, cur, [&](const std::vector<int>& rows) {
      if (found) return true;
      std::vector<int> cur2;
      combos(n, k, cur2, [&](const std::vector<int>& cols) {
        if (!found && !cofactor_det(m, rows, cols).is_zero()) found = true;
        return true;
      }, 0);
      return true;
    }, 0);
    if (found) return k;
  }
  return 0;
}

PolyMatrix random_skew_linear(Rng& rng, int n) {
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Polynomial entry;
      int terms = static_cast<int>(rng.uniform_int(0, 2));
      for (int t = 0; t < terms; ++t) {
        int var = static_cast<int>(rng.uniform_int(1, n));
        Rational c(static_cast<long>(rng.nonzero_int(5)));
        entry += Polynomial::term(Monomial::variable(var), c);
      }
      m[i][j] = entry;
      m[j][i] = -entry;
    }
  return m;
}

}  // namespace

TEST_CASE("structure matrices of the chain families") {
  StructureMatrix l5(cat("L", 5));
  // first row (0, x3, x4, x5, 0), skew mirror, all else zero
  CHECK(l5.entry(1, 2).str() == "x3");
  CHECK(l5.entry(1, 4).str() == "x5");
  CHECK(l5.entry(1, 5).is_zero());
  CHECK(l5.entry(2, 1).str() == "-x3");
  CHECK(l5.entry(2, 3).is_zero());

  StructureMatrix ab(cat("abelian", 4));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(ab.entry(i, j).is_zero());

  StructureMatrix q6(cat("Q", 6));
  CHECK(q6.entry(2, 5).str() == "-x6");
  CHECK(q6.entry(3, 4).str() == "x6");
  CHECK(q6.entry(4, 3).str() == "-x6");
}

TEST_CASE("symbolic rank on the published matrices") {
  CHECK(symbolic_rank(StructureMatrix(cat("L", 9))) == 2);
  CHECK(symbolic_rank(StructureMatrix(cat("abelian", 7))) == 0);
  CHECK(symbolic_rank(StructureMatrix(cat("Q", 8))) == 6);
}

TEST_CASE("bareiss rank equals the minor-enumeration oracle") {
  Rng rng(321);
  for (int t = 0; t < 20; ++t) {
    int n = static_cast<int>(rng.uniform_int(2, 5));
    PolyMatrix m = random_skew_linear(rng, n);
    CHECK(symbolic_rank(m) == minor_rank_oracle(m));
  }
}

TEST_CASE("symbolic determinant matches cofactor expansion") {
  Rng rng(55);
  for (int t = 0; t < 15; ++t) {
    int n = static_cast<int>(rng.uniform_int(1, 4));
    PolyMatrix m = random_skew_linear(rng, n);
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    CHECK(symbolic_determinant(m) == cofactor_det(m, all, all));
  }
}

TEST_CASE("randomized rank") {
  StructureMatrix zero(cat("abelian", 5));
  CHECK(randomized_rank(zero, 3, 1 << 16, 9).rank == 0);

  StructureMatrix l6(cat("L", 6));
  CHECK(randomized_rank(l6, 3, 1 << 16, 9).rank == 2);

  CHECK_THROWS_AS(randomized_rank(l6, 0, 1 << 16, 9), DomainError);
  CHECK_THROWS_AS(randomized_rank(l6, 3, 10, 9), DomainError);
}

TEST_CASE("randomized rank of random skew tensors matches the minor oracle") {
  // antisymmetric tensors need not satisfy Jacobi; the structure matrix and
  // its rank are defined regardless
  Rng rng(77);
  for (int t = 0; t < 12; ++t) {
    int n = static_cast<int>(rng.uniform_int(2, 5));
    StructureConstants tensor(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int terms = static_cast<int>(rng.uniform_int(0, 2));
        for (int k = 0; k < terms; ++k)
          tensor.add(i, j, static_cast<int>(rng.uniform_int(1, n)),
                     Rational(static_cast<long>(rng.nonzero_int(5))));
      }
    StructureMatrix m(tensor);
    int oracle = minor_rank_oracle(m.to_polynomials());
    CHECK(symbolic_rank(m) == oracle);
    CHECK(randomized_rank(m, 3, 1 << 16, rng.next_u64()).rank == oracle);
  }
}

TEST_CASE("elimination handles general non-skew polynomial matrices") {
  Rng rng(888);
  for (int t = 0; t < 15; ++t) {
    int n = static_cast<int>(rng.uniform_int(1, 4));
    PolyMatrix m(n, std::vector<Polynomial>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int terms = static_cast<int>(rng.uniform_int(0, 2));
        for (int k = 0; k < terms; ++k) {
          Monomial mono;
          int deg = static_cast<int>(rng.uniform_int(0, 2));
          for (int d = 0; d < deg; ++d)
            mono = mono *
                   Monomial::variable(static_cast<int>(rng.uniform_int(1, n)));
          m[i][j] += Polynomial::term(
              mono, Rational(static_cast<long>(rng.uniform_int(-4, 4)),
                             static_cast<long>(rng.uniform_int(1, 3))));
        }
      }
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    CHECK(symbolic_rank(m) == minor_rank_oracle(m));
    CHECK(symbolic_determinant(m) == cofactor_det(m, all, all));
  }
}

TEST_CASE("index reports") {
  IndexReport ab = index(cat("abelian", 6));
  CHECK(ab.index == 6);
  CHECK(ab.rank == 0);

  CHECK(index(cat("L", 10)).index == 8);
  CHECK(index(catalog::construct("F7_4", {})).index == 1);
  CHECK(index(catalog::construct("F7_1", {{"alpha", Rational(2)}})).index == 1);
  CHECK(index(catalog::construct("F7_1", {{"alpha", Rational(0)}})).index == 3);

  IndexReport both = index(cat("Q", 6));
  CHECK(both.index == 2);
  CHECK(both.rank == 4);
  CHECK(both.witness_point.has_value());
  CHECK((both.rank % 2) == 0);

  StructureConstants bad(3);
  bad.add(1, 2, 3, 1);
  bad.add(1, 3, 1, 1);
  CHECK_THROWS_AS(index(bad), DomainError);
}

TEST_CASE("index at alpha = -1 stays pinned") {
  // outside the published table; computed once and frozen as a regression
  CHECK(index(catalog::construct("F7_1", {{"alpha", Rational(-1)}})).index == 1);
}

TEST_CASE("degenerate dimension one") {
  StructureConstants one(1);
  IndexReport r = index(one);
  CHECK(r.rank == 0);
  CHECK(r.index == 1);
}

TEST_CASE("frobenius detection") {
  StructureConstants aff(2);
  aff.add(1, 2, 2, 1);  // [x1,x2] = x2
  CHECK(is_frobenius(aff));
  CHECK_FALSE(is_frobenius(cat("abelian", 3)));
  CHECK_FALSE(is_frobenius(catalog::construct("T(n,n-3)", {{"n", Rational(6)}})));
}

TEST_CASE("central extension shifts the index by one") {
  CHECK(central_extension_index_check(cat("L", 6)) == std::pair{4, 5});
  CHECK(central_extension_index_check(cat("abelian", 3)) == std::pair{3, 4});
  auto q6 = central_extension_index_check(cat("Q", 6));
  CHECK(q6 == std::pair{2, 3});
}

TEST_CASE("deformations of the chain algebra") {
  // base L6 with [x2,x3] -> x6 at degree one; every nonzero sample drops
  // the index from 4 to 2
  StructureConstants pert6(6);
  pert6.add(2, 3, 6, 1);
  Deformation d6{cat("L", 6), {{1, pert6}}};
  auto r6 = deformation_index(
      d6, {Rational(1), Rational(2), Rational(1, 3)});
  CHECK(r6.index_at_zero == 4);
  for (const auto& [t, chi] : r6.sampled) CHECK(chi == 2);
  CHECK(r6.generic_index == 2);
  CHECK(r6.monotone);
  CHECK(specialize(d6, Rational(1)) == catalog::construct("F6_2", {}));

  StructureConstants pert7(7);
  pert7.add(2, 3, 7, 1);
  Deformation d7{cat("L", 7), {{1, pert7}}};
  auto r7 = deformation_index(d7, {Rational(1), Rational(-2), Rational(5, 7)});
  CHECK(r7.index_at_zero == 5);
  CHECK(r7.generic_index == 3);
  CHECK(specialize(d7, Rational(1)) == catalog::construct("F7_7", {}));

  // zero perturbation changes nothing
  Deformation dz{cat("L", 5), {}};
  auto rz = deformation_index(dz, {Rational(3)});
  CHECK(rz.index_at_zero == rz.generic_index);

  // a perturbation that breaks Jacobi at the sampled t is rejected
  StructureConstants broken(6);
  broken.add(1, 3, 1, 1);
  Deformation db{cat("L", 6), {{1, broken}}};
  CHECK_THROWS_AS(deformation_index(db, {Rational(1)}), DomainError);
}

TEST_CASE("symbolic rank survives a dense basis change") {
  // a dense invertible change fills every entry with a dense linear form,
  // the worst case for the fraction-free elimination
  Rng rng(4242);
  StructureConstants q6 = cat("Q", 6);
  QMatrix p;
  while (true) {
    p = QMatrix(6, QVector(6));
    for (auto& row : p)
      for (auto& x : row)
        x = Rational(static_cast<long>(rng.uniform_int(-5, 5)));
    if (inverse(p)) break;
  }
  StructureConstants moved = change_basis(q6, p);
  IndexOptions sym;
  sym.method = RankMethod::Symbolic;
  CHECK(index(moved, sym).index == 2);
}

TEST_CASE("deformations with terms of two different degrees") {
  StructureConstants first(6);
  first.add(2, 3, 6, 1);
  StructureConstants second(6);
  second.add(2, 5, 6, 1);
  second.add(3, 4, 6, -1);
  Deformation d{cat("L", 6), {{1, first}, {2, second}}};

  StructureConstants at2 = specialize(d, Rational(2));
  CHECK(at2.coeff(2, 3, 6) == Rational(2));
  CHECK(at2.coeff(2, 5, 6) == Rational(4));
  CHECK(at2.coeff(3, 4, 6) == Rational(-4));
  CHECK(validate(at2).ok());

  auto r = deformation_index(d, {Rational(1), Rational(2), Rational(-3)});
  CHECK(r.index_at_zero == 4);
  CHECK(r.generic_index == 2);
  CHECK(r.monotone);
}
