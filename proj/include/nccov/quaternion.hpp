#pragma once

#include <array>
#include <string>

#include "nccov/rational.hpp"

namespace nccov {

/// Quaternion with exact rational coefficients: w + x i + y j + z k.
///
/// Multiplication follows the usual unit relations (i*j = k, j*k = i,
/// k*i = j, squares of units are -1) and is associative but not
/// commutative. Every nonzero element has a two-sided inverse, so the type
/// is a division algebra over the rationals; rationals embed centrally.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(const Rational& w) : w_(w) {}  // NOLINT: central embedding
  Quaternion(int w) : w_(w) {}              // NOLINT
  Quaternion(Rational w, Rational x, Rational y, Rational z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quaternion zero() { return Quaternion(); }
  static Quaternion one() { return Quaternion(1); }
  static Quaternion i() { return Quaternion(0, 1, 0, 0); }
  static Quaternion j() { return Quaternion(0, 0, 1, 0); }
  static Quaternion k() { return Quaternion(0, 0, 0, 1); }

  /// Canonical basis of the algebra over its rational center: (1, i, j, k).
  static std::array<Quaternion, 4> d_basis() {
    return {one(), i(), j(), k()};
  }

  const Rational& w() const { return w_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  bool is_zero() const {
    return w_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero();
  }

  /// True when the element lies in the rational center (x = y = z = 0).
  bool is_central() const {
    return x_.is_zero() && y_.is_zero() && z_.is_zero();
  }

  Quaternion conjugate() const { return Quaternion(w_, -x_, -y_, -z_); }

  /// w^2 + x^2 + y^2 + z^2. Nonnegative, zero only for the zero element,
  /// and multiplicative: norm2(p*q) = norm2(p)*norm2(q).
  Rational norm2() const;

  /// Two-sided inverse conjugate()/norm2(); throws ZeroDivision on zero.
  Quaternion inverse() const;

  Quaternion operator-() const { return Quaternion(-w_, -x_, -y_, -z_); }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend bool operator==(const Quaternion& p, const Quaternion& q);
  friend bool operator!=(const Quaternion& p, const Quaternion& q);

 private:
  Rational w_, x_, y_, z_;
};

}  // namespace nccov
