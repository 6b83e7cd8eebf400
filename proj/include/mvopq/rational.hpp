#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace mvopq {

/**
 * Arbitrary-precision rational number.
 *
 * Thin value wrapper around GMP's mpq_class that keeps every instance in
 * canonical form: denominator > 0 and gcd(numerator, denominator) = 1.
 * Serializes as "p/q", or "p" when the denominator is 1.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpq_class& v);

  // Parses "p/q" or "p" (optional sign, arbitrary precision).
  static Rational from_string(const std::string& s);
  std::string to_string() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;
  Rational pow(unsigned k) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// n! and the odd double factorial (2k-1)!! = 1*3*...*(2k-1), as rationals.
Rational factorial(unsigned n);
Rational odd_double_factorial(unsigned k);

// Falling factorial [n]_i = n(n-1)...(n-i+1), with [n]_0 = 1.
Rational falling_factorial(long n, unsigned i);

Rational binomial(unsigned n, unsigned k);

}  // namespace mvopq
