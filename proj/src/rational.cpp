#include "mvopq/rational.hpp"

#include <ostream>

#include "mvopq/errors.hpp"

namespace mvopq {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
  if (v_.get_den() == 0) throw DomainError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
  if (v.get_den() == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

std::string Rational::to_string() const { return v_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(unsigned k) const {
  mpq_class r(1);
  mpq_class base = v_;
  for (unsigned e = k; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    if (e > 1) base *= base;
  }
  return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_.get_str();
}

Rational factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(mpq_class(r));
}

Rational odd_double_factorial(unsigned k) {
  mpz_class r(1);
  for (unsigned j = 1; j <= k; ++j) r *= 2 * j - 1;
  return Rational(mpq_class(r));
}

Rational falling_factorial(long n, unsigned i) {
  mpz_class r(1);
  for (unsigned j = 0; j < i; ++j) r *= n - static_cast<long>(j);
  return Rational(mpq_class(r));
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(mpq_class(r));
}

}  // namespace mvopq
