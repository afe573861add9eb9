#include "nccov/rational.hpp"

namespace nccov {

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw ZeroDivision("rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
  if (sgn(v_.get_den()) == 0) {
    throw ZeroDivision("rational with zero denominator");
  }
  v_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw ZeroDivision("inverse of zero");
  }
  mpq_class r(1);
  r /= v_;
  return Rational(r);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::string Rational::to_string() const {
  if (v_.get_den() == 1) {
    return v_.get_num().get_str();
  }
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.v_ + b.v_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.v_ - b.v_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.v_ * b.v_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) {
    throw ZeroDivision("division by zero");
  }
  return Rational(mpq_class(a.v_ / b.v_));
}

bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

}  // namespace nccov
