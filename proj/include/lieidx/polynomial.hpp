#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieidx/rational.hpp"

namespace lieidx {

/// Power product of variables x1, x2, ... with positive exponents.
/// Sparse: stores (variable index, exponent) pairs sorted by variable;
/// the empty product is the constant monomial.
class Monomial {
 public:
  using Factor = std::pair<std::int32_t, std::int32_t>;  // (var >= 1, exp >= 1)

  Monomial() = default;
  static Monomial variable(int var, int exp = 1);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_constant() const { return f_.empty(); }
  int degree() const { return degree_; }
  int max_variable() const { return f_.empty() ? 0 : f_.back().first; }

  Monomial operator*(const Monomial& o) const;
  /// Quotient this / o, or nullopt when o does not divide this.
  std::optional<Monomial> divided_by(const Monomial& o) const;

  /// Graded lexicographic comparison with x1 > x2 > ...:
  /// higher total degree first, ties broken at the smallest variable index
  /// where the exponents differ (larger exponent wins).
  static int cmp_grlex(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return f_ == o.f_; }

  std::size_t hash() const;
  // e.g. "x1^2*x3"; "1" for the constant monomial
  std::string str(const std::string& var_prefix = "x") const;

 private:
  std::vector<Factor> f_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Exact sparse multivariate polynomial over the rationals. Terms are kept
/// in strictly decreasing graded-lex order with nonzero coefficients; the
/// zero polynomial has no terms.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(Rational c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}
  static Polynomial variable(int var);
  static Polynomial term(Monomial m, Rational c);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const { return t_.empty() ? -1 : t_.front().first.degree(); }
  std::size_t term_count() const { return t_.size(); }
  int max_variable() const;

  const Term& leading_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  bool operator==(const Polynomial& o) const { return t_ == o.t_; }

  Polynomial scaled(const Rational& c) const;

  /// Exact evaluation. point[i-1] is the value of x_i; every variable
  /// occurring in the polynomial must have a value.
  Rational eval(const std::vector<Rational>& point) const;

  /// integer content as a rational: gcd of coefficient numerators over
  /// lcm of coefficient denominators. Zero polynomial has content 0.
  Rational content() const;

  std::string str(const std::string& var_prefix = "x") const;

 private:
  friend Polynomial exact_div(const Polynomial& a, const Polynomial& b);
  static Polynomial from_unsorted(std::vector<Term> terms);

  std::vector<Term> t_;
};

/// Quotient a / b where b is required to divide a exactly in the polynomial
/// ring. A failed division throws InternalError: the fraction-free
/// elimination that relies on this guarantees exactness, so failure means a
/// bug, not bad data.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Degree <= 1 form sum_s c_s * x_s with no constant part; the entry type of
/// the symbolic structure matrix.
class LinearForm {
 public:
  using Coeff = std::pair<std::int32_t, Rational>;  // (var >= 1, nonzero)

  LinearForm() = default;

  void add(int var, const Rational& c);
  const std::vector<Coeff>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  LinearForm operator-() const;
  Polynomial to_polynomial() const;
  Rational eval(const std::vector<Rational>& point) const;
  std::string str() const { return to_polynomial().str(); }
  bool operator==(const LinearForm& o) const { return c_ == o.c_; }

 private:
  std::vector<Coeff> c_;  // sorted by variable, nonzero coefficients
};

}  // namespace lieidx
