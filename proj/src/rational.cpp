#include "lieidx/rational.hpp"

#include <cctype>
#include <ostream>

namespace lieidx {

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t pos = 0;
  auto read_int = [&](bool allow_sign) -> std::string {
    std::string out;
    if (allow_sign && pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
      out += s[pos++];
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      out += s[pos++];
      ++digits;
    }
    if (digits == 0) throw ParseError("malformed rational literal '" + s + "'");
    return out;
  };
  std::string num = read_int(true);
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = read_int(false);
  }
  if (pos != s.size())
    throw ParseError("trailing characters in rational literal '" + s + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in rational literal '" + s + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e)
                           : static_cast<unsigned long>(e);
  if (invert && is_zero()) throw DomainError("zero to a negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  return invert ? Rational(den, num) : Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace lieidx
