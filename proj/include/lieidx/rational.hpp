#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "lieidx/errors.hpp"

namespace lieidx {

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; every operation is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) { canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

  /// Parses "a" or "a/b" with optional sign. Throws ParseError otherwise.
  static Rational from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical rendering: "a" when the denominator is 1, else "a/b".
  std::string str() const;

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  /// Exact integer power; negative exponents invert (throws on 0^-k).
  Rational pow(long e) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void canonicalize() {
    if (v_.get_den() == 0) throw DomainError("rational with zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

/// gcd of two non-negative integers, gcd(0, x) = x.
mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace lieidx
