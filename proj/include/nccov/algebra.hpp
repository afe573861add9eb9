#pragma once

#include <array>
#include <concepts>

#include "nccov/quaternion.hpp"

namespace nccov {

// Contract for the scalars a matrix may hold: an associative unital algebra
// with exact equality and partial inversion.  Multiplication need not commute.
template <typename A>
concept ScalarAlgebra = requires(const A a, const A b) {
  { A() } -> std::same_as<A>;
  { A(1) } -> std::same_as<A>;
  { a + b } -> std::convertible_to<A>;
  { a - b } -> std::convertible_to<A>;
  { a * b } -> std::convertible_to<A>;
  { -a } -> std::convertible_to<A>;
  { a.inverse() } -> std::convertible_to<A>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::same_as<bool>;
  { a != b } -> std::same_as<bool>;
};

static_assert(ScalarAlgebra<Quaternion>);
static_assert(ScalarAlgebra<Rational>);

}  // namespace nccov
