#include "lieidx/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "lieidx/errors.hpp"

namespace lieidx {

Monomial Monomial::variable(int var, int exp) {
  if (var < 1) throw DomainError("variable index must be >= 1");
  if (exp < 1) throw DomainError("exponent must be >= 1");
  Monomial m;
  m.f_.emplace_back(var, exp);
  m.degree_ = exp;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() && b != o.f_.end()) {
    if (a->first < b->first)
      r.f_.push_back(*a++);
    else if (a->first > b->first)
      r.f_.push_back(*b++);
    else {
      r.f_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  r.f_.insert(r.f_.end(), a, f_.end());
  r.f_.insert(r.f_.end(), b, o.f_.end());
  r.degree_ = degree_ + o.degree_;
  return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  auto a = f_.begin();
  for (const auto& [var, exp] : o.f_) {
    while (a != f_.end() && a->first < var) r.f_.push_back(*a++);
    if (a == f_.end() || a->first != var || a->second < exp)
      return std::nullopt;
    if (a->second > exp) r.f_.emplace_back(var, a->second - exp);
    ++a;
  }
  r.f_.insert(r.f_.end(), a, f_.end());
  r.degree_ = degree_ - o.degree_;
  return r;
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  auto i = a.f_.begin(), j = b.f_.begin();
  while (i != a.f_.end() && j != b.f_.end()) {
    if (i->first != j->first)  // smaller index present => larger in lex
      return i->first < j->first ? 1 : -1;
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
    ++i, ++j;
  }
  if (i != a.f_.end()) return 1;
  if (j != b.f_.end()) return -1;
  return 0;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [var, exp] : f_) {
    h = (h ^ static_cast<std::size_t>(var)) * 0x100000001b3ULL;
    h = (h ^ static_cast<std::size_t>(exp)) * 0x100000001b3ULL;
  }
  return h;
}

std::string Monomial::str(const std::string& var_prefix) const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& [var, exp] : f_) {
    if (!s.empty()) s += "*";
    s += var_prefix + std::to_string(var);
    if (exp > 1) s += "^" + std::to_string(exp);
  }
  return s;
}

Polynomial::Polynomial(Rational c) {
  if (!c.is_zero()) t_.emplace_back(Monomial(), std::move(c));
}

Polynomial Polynomial::variable(int var) {
  return term(Monomial::variable(var), Rational(1));
}

Polynomial Polynomial::term(Monomial m, Rational c) {
  Polynomial p;
  if (!c.is_zero()) p.t_.emplace_back(std::move(m), std::move(c));
  return p;
}

int Polynomial::max_variable() const {
  int v = 0;
  for (const auto& [m, c] : t_) v = std::max(v, m.max_variable());
  return v;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (t_.empty()) throw DomainError("zero polynomial has no leading term");
  return t_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  r.t_.reserve(t_.size());
  for (const auto& [m, c] : t_) r.t_.emplace_back(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.t_.reserve(t_.size() + o.t_.size());
  auto a = t_.begin(), b = o.t_.begin();
  while (a != t_.end() && b != o.t_.end()) {
    int c = Monomial::cmp_grlex(a->first, b->first);
    if (c > 0)
      r.t_.push_back(*a++);
    else if (c < 0)
      r.t_.push_back(*b++);
    else {
      Rational s = a->second + b->second;
      if (!s.is_zero()) r.t_.emplace_back(a->first, std::move(s));
      ++a, ++b;
    }
  }
  r.t_.insert(r.t_.end(), a, t_.end());
  r.t_.insert(r.t_.end(), b, o.t_.end());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return Monomial::cmp_grlex(a.first, b.first) > 0;
  });
  Polynomial r;
  r.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.t_.empty() && Monomial::cmp_grlex(r.t_.back().first, t.first) == 0)
      r.t_.back().second += t.second;
    else
      r.t_.push_back(std::move(t));
  }
  std::erase_if(r.t_, [](const Term& t) { return t.second.is_zero(); });
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  if (t_.size() == 1 || o.t_.size() == 1) {
    const Polynomial& single = t_.size() == 1 ? *this : o;
    const Polynomial& many = t_.size() == 1 ? o : *this;
    const auto& [sm, sc] = single.t_.front();
    std::vector<Term> out;
    out.reserve(many.t_.size());
    for (const auto& [m, c] : many.t_) out.emplace_back(m * sm, c * sc);
    if (sm.is_constant()) {  // order already correct
      Polynomial r;
      r.t_ = std::move(out);
      return r;
    }
    return from_unsorted(std::move(out));
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) acc[ma * mb] += ca * cb;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  return from_unsorted(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial();
  Polynomial r;
  r.t_.reserve(t_.size());
  for (const auto& [m, coef] : t_) r.t_.emplace_back(m, coef * c);
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  Rational total(0);
  for (const auto& [m, c] : t_) {
    Rational v = c;
    for (const auto& [var, exp] : m.factors()) {
      if (var > static_cast<int>(point.size()))
        throw DomainError("evaluation point has no value for x" +
                          std::to_string(var));
      v *= point[var - 1].pow(exp);
    }
    total += v;
  }
  return total;
}

Rational Polynomial::content() const {
  if (t_.empty()) return Rational(0);
  mpz_class num = 0, den = 1;
  for (const auto& [m, c] : t_) {
    num = gcd(num, abs(c.numerator()));
    den = lcm(den, c.denominator());
  }
  return Rational(num, den);
}

std::string Polynomial::str(const std::string& var_prefix) const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
      first = false;
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (m.is_constant())
      s += a.str();
    else if (a.is_one())
      s += m.str(var_prefix);
    else
      s += a.str() + "*" + m.str(var_prefix);
  }
  return s;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return Polynomial();
  const auto& [lm, lc] = b.leading_term();
  Polynomial rem = a;
  std::vector<Polynomial::Term> quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    auto qm = rm.divided_by(lm);
    if (!qm)
      throw InternalError("non-exact polynomial division: " + a.str() +
                          " by " + b.str());
    Rational qc = rc / lc;
    rem -= b * Polynomial::term(*qm, qc);
    quot.emplace_back(std::move(*qm), std::move(qc));
  }
  // successive leading terms strictly decrease, so quot is already ordered
  Polynomial q;
  q.t_ = std::move(quot);
  return q;
}

void LinearForm::add(int var, const Rational& c) {
  if (var < 1) throw DomainError("variable index must be >= 1");
  if (c.is_zero()) return;
  auto it = std::lower_bound(
      c_.begin(), c_.end(), var,
      [](const Coeff& e, int v) { return e.first < v; });
  if (it != c_.end() && it->first == var) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  } else {
    c_.emplace(it, var, c);
  }
}

LinearForm LinearForm::operator-() const {
  LinearForm r;
  r.c_.reserve(c_.size());
  for (const auto& [var, c] : c_) r.c_.emplace_back(var, -c);
  return r;
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    p += Polynomial::term(Monomial::variable(it->first), it->second);
  return p;
}

Rational LinearForm::eval(const std::vector<Rational>& point) const {
  Rational total(0);
  for (const auto& [var, c] : c_) {
    if (var > static_cast<int>(point.size()))
      throw DomainError("evaluation point has no value for x" +
                        std::to_string(var));
    total += c * point[var - 1];
  }
  return total;
}

}  // namespace lieidx
