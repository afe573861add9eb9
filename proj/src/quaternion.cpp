#include "nccov/quaternion.hpp"

namespace nccov {

Rational Quaternion::norm2() const {
  return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_;
}

Quaternion Quaternion::inverse() const {
  if (is_zero()) {
    throw ZeroDivision("inverse of zero quaternion");
  }
  const Rational n = norm2();
  const Quaternion c = conjugate();
  return Quaternion(c.w_ / n, c.x_ / n, c.y_ / n, c.z_ / n);
}

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return Quaternion(p.w_ + q.w_, p.x_ + q.x_, p.y_ + q.y_, p.z_ + q.z_);
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return Quaternion(p.w_ - q.w_, p.x_ - q.x_, p.y_ - q.y_, p.z_ - q.z_);
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return Quaternion(
      p.w_ * q.w_ - p.x_ * q.x_ - p.y_ * q.y_ - p.z_ * q.z_,
      p.w_ * q.x_ + p.x_ * q.w_ + p.y_ * q.z_ - p.z_ * q.y_,
      p.w_ * q.y_ - p.x_ * q.z_ + p.y_ * q.w_ + p.z_ * q.x_,
      p.w_ * q.z_ + p.x_ * q.y_ - p.y_ * q.x_ + p.z_ * q.w_);
}

bool operator==(const Quaternion& p, const Quaternion& q) {
  return p.w_ == q.w_ && p.x_ == q.x_ && p.y_ == q.y_ && p.z_ == q.z_;
}

bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }

}  // namespace nccov
