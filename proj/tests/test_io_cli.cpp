#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieidx/catalog.hpp"
#include "lieidx/errors.hpp"
#include "lieidx/io.hpp"

using namespace lieidx;

TEST_CASE("parsing the dim-3 chain") {
  auto f = io::parse_algebra_string("dim 3\nbracket 1 2 3 1\n");
  CHECK(f.algebra.dim() == 3);
  CHECK(f.algebra.coeff(1, 2, 3) == Rational(1));
  CHECK(f.algebra == catalog::construct("L", {{"n", Rational(3)}}));
}

TEST_CASE("a bare dim line is the abelian algebra") {
  auto f = io::parse_algebra_string("dim 2");
  CHECK(f.algebra.dim() == 2);
  CHECK(f.algebra.entries().empty());
}

TEST_CASE("grammar violations") {
  CHECK_THROWS_AS(io::parse_algebra_string("dim 3\nbracket 2 1 3 1\n"),
                  ParseError);
  CHECK_THROWS_AS(io::parse_algebra_string("dim 3\nbracket 2 2 3 1\n"),
                  ParseError);
  CHECK_THROWS_AS(io::parse_algebra_string("dim 0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_algebra_string("bracket 1 2 3 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_algebra_string(""), ParseError);
  CHECK_THROWS_AS(io::parse_algebra_string("dim 3\nbracket 1 2 4 1\n"),
                  ParseError);
  CHECK_THROWS_AS(
      io::parse_algebra_string("dim 3\nbracket 1 2 3 1\nbracket 1 2 3 2\n"),
      ParseError);
  CHECK_THROWS_AS(io::parse_algebra_string("dim 3\nbracket 1 2 3 1/0\n"),
                  ParseError);
  CHECK_THROWS_AS(io::parse_algebra_string("dim 3\nbracket 1 2 3\n"),
                  ParseError);
  CHECK_THROWS_AS(io::parse_algebra_string("dim 3\nfoo 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_algebra_string("dim 3\ndim 3\n"), ParseError);
}

TEST_CASE("line numbers in diagnostics") {
  try {
    io::parse_algebra_string("# header\ndim 3\nbracket 2 1 3 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("comments, metadata and rational coefficients") {
  auto f = io::parse_algebra_string(
      "# name: half chain\n# note: test input\n"
      "dim 3   # trailing comment\n"
      "bracket 1 2 3 -1/2\n");
  CHECK(f.name == "half chain");
  CHECK(f.note == "test input");
  CHECK(f.algebra.coeff(1, 2, 3) == Rational(-1, 2));
  CHECK(f.algebra.coeff(2, 1, 3) == Rational(1, 2));
}

TEST_CASE("order insensitivity") {
  auto a = io::parse_algebra_string("dim 4\nbracket 1 2 3 1\nbracket 1 3 4 1\n");
  auto b = io::parse_algebra_string("dim 4\nbracket 1 3 4 1\nbracket 1 2 3 1\n");
  CHECK(a.algebra == b.algebra);
}

TEST_CASE("emission is canonical and byte-stable") {
  StructureConstants q6 = catalog::construct("Q", {{"n", Rational(6)}});
  std::string text = io::emit_algebra(q6, "Q n=6");
  CHECK(text == io::emit_algebra(q6, "Q n=6"));
  CHECK(text.rfind("# name: Q n=6\ndim 6\n", 0) == 0);
  auto parsed = io::parse_algebra_string(text);
  CHECK(parsed.algebra == q6);
  CHECK(parsed.name == "Q n=6");
}

TEST_CASE("round trip across the whole catalog sweep") {
  for (const auto& exp : catalog::expected_results()) {
    StructureConstants alg = catalog::construct(exp.name, exp.params);
    auto parsed = io::parse_algebra_string(io::emit_algebra(alg));
    CHECK(parsed.algebra == alg);
  }
}
