#pragma once

#include <gmpxx.h>

#include <string>

#include "nccov/errors.hpp"

namespace nccov {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Invariants: the denominator is positive and gcd(|num|, den) = 1; every
/// constructor canonicalizes, so equality is structural.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}            // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& v);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// Multiplicative inverse; throws ZeroDivision on zero.
  Rational inverse() const;

  Rational operator-() const;

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  mpq_class v_;
};

}  // namespace nccov
