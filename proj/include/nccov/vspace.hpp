#pragma once

#include <cstddef>

#include "nccov/matrix.hpp"

namespace nccov {

// Coordinates live in 1-row matrices that contract with basis and
// transformation matrices on the right: the expansion of a vector with
// coordinates v relative to a basis e is the rc-product v * e, which puts
// each scalar coefficient to the left of its basis row exactly as scalars
// act on the left of vectors.

/// 1×n row of quaternion coordinates.
class CoordRow {
 public:
  explicit CoordRow(std::size_t n) : row_(1, n) {}

  explicit CoordRow(NcMatrix row) : row_(std::move(row)) {
    if (row_.rows() != 1) {
      throw ShapeMismatch("coordinate row must have exactly 1 row, got " +
                          std::to_string(row_.rows()));
    }
  }

  /// k-th coordinate unit row of dimension n.
  static CoordRow unit(std::size_t n, std::size_t k) {
    CoordRow v(n);
    v[k] = Quaternion(1);
    return v;
  }

  std::size_t dim() const { return row_.cols(); }

  const Quaternion& operator[](std::size_t k) const { return row_(0, k); }
  Quaternion& operator[](std::size_t k) { return row_(0, k); }

  const NcMatrix& row() const { return row_; }

  friend CoordRow operator+(const CoordRow& a, const CoordRow& b) {
    return CoordRow(a.row_ + b.row_);
  }

  friend CoordRow operator-(const CoordRow& a, const CoordRow& b) {
    return CoordRow(a.row_ - b.row_);
  }

  friend CoordRow operator-(const CoordRow& a) { return CoordRow(-a.row_); }

  friend bool operator==(const CoordRow& a, const CoordRow& b) {
    return a.row_ == b.row_;
  }

  friend bool operator!=(const CoordRow& a, const CoordRow& b) {
    return !(a == b);
  }

  bool is_zero() const {
    for (std::size_t k = 0; k < dim(); ++k) {
      if (!(*this)[k].is_zero()) return false;
    }
    return true;
  }

 private:
  NcMatrix row_;
};

inline CoordRow scalar_left_mul(const Quaternion& a, const CoordRow& v) {
  return CoordRow(scalar_left_mul(a, v.row()));
}

/// Basis of the n-dimensional column space, stored as the n×n coordinate
/// matrix of its vectors relative to the fixed reference frame: row k holds
/// the reference coordinates of basis vector k. Construction rejects
/// matrices without an rc-inverse, so every Basis is valid by construction.
class Basis {
 public:
  explicit Basis(NcMatrix e) : e_(std::move(e)) {
    if (e_.rows() != e_.cols()) {
      throw ShapeMismatch("basis matrix must be square, got " +
                          NcMatrix::shape_str(e_));
    }
    if (!is_rc_nonsingular(e_)) {
      throw Singular("basis matrix has no rc inverse");
    }
  }

  /// The reference frame itself: the identity matrix.
  static Basis reference(std::size_t n) { return Basis(NcMatrix::identity(n)); }

  std::size_t dim() const { return e_.rows(); }
  const NcMatrix& matrix() const { return e_; }

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.e_ == b.e_;
  }

  friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }

 private:
  NcMatrix e_;
};

/// Matrix of a homomorphism between two based spaces. Shape n_in × n_out;
/// row i holds the basis_out coordinates of the image of basis_in vector i.
class HomMatrix {
 public:
  HomMatrix(NcMatrix f, Basis basis_in, Basis basis_out)
      : f_(std::move(f)),
        basis_in_(std::move(basis_in)),
        basis_out_(std::move(basis_out)) {
    if (f_.rows() != basis_in_.dim() || f_.cols() != basis_out_.dim()) {
      throw ShapeMismatch("homomorphism matrix " + NcMatrix::shape_str(f_) +
                          " does not map a " +
                          std::to_string(basis_in_.dim()) + "-dim space to a " +
                          std::to_string(basis_out_.dim()) + "-dim space");
    }
  }

  std::size_t n_in() const { return f_.rows(); }
  std::size_t n_out() const { return f_.cols(); }
  const NcMatrix& f() const { return f_; }
  const Basis& basis_in() const { return basis_in_; }
  const Basis& basis_out() const { return basis_out_; }

 private:
  NcMatrix f_;
  Basis basis_in_;
  Basis basis_out_;
};

/// Reference coordinates of the vector with coordinates v relative to e.
CoordRow expand_in_reference(const CoordRow& v, const Basis& e);

/// Inverse of expand_in_reference: coordinates relative to e of the vector
/// with reference coordinates v_ref.
CoordRow coords_in_basis(const CoordRow& v_ref, const Basis& e);

/// Image coordinates w[k] = sum_i v[i] * f[i][k], relative to basis_out.
CoordRow apply_hom(const HomMatrix& h, const CoordRow& v);

HomMatrix hom_from_matrix(NcMatrix f, Basis basis_in, Basis basis_out);
const NcMatrix& matrix_of_hom(const HomMatrix& h);

/// Applying the composite equals applying h1 first, then h2.
/// Throws BasisMismatch unless h1.basis_out = h2.basis_in.
HomMatrix compose_homs(const HomMatrix& h1, const HomMatrix& h2);

/// Inverse automorphism; requires a square rc-nonsingular matrix.
HomMatrix inverse_hom(const HomMatrix& h);

}  // namespace nccov
