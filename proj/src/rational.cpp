#include "lagcoh/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lagcoh {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  // Keep the accepted syntax strict: optional sign, digits, optional /digits.
  std::size_t i = 0;
  auto bad = [&]() { throw std::invalid_argument("Rational: cannot parse '" + s + "'"); };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) bad();
  if (i < s.size()) {
    if (s[i] != '/') bad();
    ++i;
    digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0 || i != s.size()) bad();
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) bad();
  if (sgn(v.get_den()) == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational inverse(const Rational& a) {
  if (a.is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(1) / a;
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

}  // namespace lagcoh
