#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nccov/algebra.hpp"
#include "nccov/errors.hpp"

namespace nccov {

// Dense matrix over a scalar algebra A.  Because A may be non-commutative the
// two contraction orders give genuinely different products; both are provided
// as free functions and every routine below states which one it is built on.
template <ScalarAlgebra A>
class MatrixOf {
 public:
  MatrixOf() : rows_(0), cols_(0) {}

  MatrixOf(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, A()) {}

  MatrixOf(std::initializer_list<std::initializer_list<A>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) {
        throw ShapeMismatch("ragged initializer: expected " +
                            std::to_string(cols_) + " columns, got " +
                            std::to_string(r.size()));
      }
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static MatrixOf identity(std::size_t n) {
    MatrixOf m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = A(1);
    return m;
  }

  static MatrixOf zero(std::size_t rows, std::size_t cols) {
    return MatrixOf(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  A& operator()(std::size_t i, std::size_t j) {
    check_index(i, j);
    return data_[i * cols_ + j];
  }

  const A& operator()(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return data_[i * cols_ + j];
  }

  bool same_shape(const MatrixOf& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  // Equality on differently shaped matrices is false, not an error; use
  // mat_eq when a shape mismatch should be reported instead of absorbed.
  friend bool operator==(const MatrixOf& a, const MatrixOf& b) {
    if (!a.same_shape(b)) return false;
    return a.data_ == b.data_;
  }

  friend bool operator!=(const MatrixOf& a, const MatrixOf& b) {
    return !(a == b);
  }

  friend MatrixOf operator+(const MatrixOf& a, const MatrixOf& b) {
    if (!a.same_shape(b)) {
      throw ShapeMismatch("sum of " + shape_str(a) + " and " + shape_str(b));
    }
    MatrixOf m(a.rows_, a.cols_);
    for (std::size_t t = 0; t < a.data_.size(); ++t) {
      m.data_[t] = a.data_[t] + b.data_[t];
    }
    return m;
  }

  friend MatrixOf operator-(const MatrixOf& a, const MatrixOf& b) {
    if (!a.same_shape(b)) {
      throw ShapeMismatch("difference of " + shape_str(a) + " and " +
                          shape_str(b));
    }
    MatrixOf m(a.rows_, a.cols_);
    for (std::size_t t = 0; t < a.data_.size(); ++t) {
      m.data_[t] = a.data_[t] - b.data_[t];
    }
    return m;
  }

  friend MatrixOf operator-(const MatrixOf& a) {
    MatrixOf m(a.rows_, a.cols_);
    for (std::size_t t = 0; t < a.data_.size(); ++t) m.data_[t] = -a.data_[t];
    return m;
  }

  static std::string shape_str(const MatrixOf& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
      throw ShapeMismatch("index (" + std::to_string(i) + "," +
                          std::to_string(j) + ") out of range for " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<A> data_;
};

// Row-over-column product: entry (i,j) contracts row i of a against column j
// of b, scalar factors taken in the order a then b.
template <ScalarAlgebra A>
MatrixOf<A> rc_product(const MatrixOf<A>& a, const MatrixOf<A>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("rc_product of " + MatrixOf<A>::shape_str(a) +
                        " and " + MatrixOf<A>::shape_str(b));
  }
  MatrixOf<A> m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      A s{};
      for (std::size_t k = 0; k < a.cols(); ++k) {
        s = s + a(i, k) * b(k, j);
      }
      m(i, j) = s;
    }
  }
  return m;
}

// Column-over-row product: entry (i,j) contracts column i of a against row j
// of b, scalar factors again taken in the order a then b.  The result is
// a.cols() by b.rows().  Over a commutative algebra this is the transpose of
// the rc product of the transposes and collapses to ordinary multiplication;
// here it is an independent operation.
template <ScalarAlgebra A>
MatrixOf<A> cr_product(const MatrixOf<A>& a, const MatrixOf<A>& b) {
  if (a.rows() != b.cols()) {
    throw ShapeMismatch("cr_product of " + MatrixOf<A>::shape_str(a) +
                        " and " + MatrixOf<A>::shape_str(b));
  }
  MatrixOf<A> m(a.cols(), b.rows());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      A s{};
      for (std::size_t k = 0; k < a.rows(); ++k) {
        s = s + a(k, i) * b(j, k);
      }
      m(i, j) = s;
    }
  }
  return m;
}

template <ScalarAlgebra A>
MatrixOf<A> transpose(const MatrixOf<A>& a) {
  MatrixOf<A> m(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m(j, i) = a(i, j);
    }
  }
  return m;
}

template <ScalarAlgebra A>
MatrixOf<A> scalar_left_mul(const A& s, const MatrixOf<A>& a) {
  MatrixOf<A> m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m(i, j) = s * a(i, j);
    }
  }
  return m;
}

template <ScalarAlgebra A>
MatrixOf<A> scalar_right_mul(const MatrixOf<A>& a, const A& s) {
  MatrixOf<A> m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m(i, j) = a(i, j) * s;
    }
  }
  return m;
}

template <ScalarAlgebra A>
MatrixOf<A> mat_add(const MatrixOf<A>& a, const MatrixOf<A>& b) {
  return a + b;
}

template <ScalarAlgebra A>
bool mat_eq(const MatrixOf<A>& a, const MatrixOf<A>& b) {
  if (!a.same_shape(b)) {
    throw ShapeMismatch("comparing " + MatrixOf<A>::shape_str(a) + " with " +
                        MatrixOf<A>::shape_str(b));
  }
  return a == b;
}

namespace detail {

// Gauss-Jordan elimination on the augmented block [g | I] with every row
// operation applied as a left multiplication, which is the side that is
// compatible with the rc product.  Returns the inverse, or an empty optional
// shape (0x0) when a pivot column dies.  Division-ring scalars make partial
// pivoting unnecessary: any nonzero entry is a unit.
template <ScalarAlgebra A>
std::pair<bool, MatrixOf<A>> rc_eliminate(const MatrixOf<A>& g) {
  if (g.rows() != g.cols()) {
    throw ShapeMismatch("rc_inverse of non-square " +
                        MatrixOf<A>::shape_str(g));
  }
  const std::size_t n = g.rows();
  MatrixOf<A> left = g;
  MatrixOf<A> right = MatrixOf<A>::identity(n);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!left(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return {false, MatrixOf<A>()};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(left(pivot, j), left(col, j));
        std::swap(right(pivot, j), right(col, j));
      }
    }
    const A pinv = left(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      left(col, j) = pinv * left(col, j);
      right(col, j) = pinv * right(col, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const A factor = left(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        left(r, j) = left(r, j) - factor * left(col, j);
        right(r, j) = right(r, j) - factor * right(col, j);
      }
    }
  }
  return {true, right};
}

}  // namespace detail

// Inverse with respect to the rc product.  The elimination produces a left
// inverse; over square matrices with division-ring entries a one-sided
// inverse is automatically two-sided.
template <ScalarAlgebra A>
MatrixOf<A> rc_inverse(const MatrixOf<A>& g) {
  auto [ok, inv] = detail::rc_eliminate(g);
  if (!ok) {
    throw Singular("matrix has no rc inverse");
  }
  return inv;
}

template <ScalarAlgebra A>
bool is_rc_nonsingular(const MatrixOf<A>& g) {
  return detail::rc_eliminate(g).first;
}

using NcMatrix = MatrixOf<Quaternion>;

}  // namespace nccov
