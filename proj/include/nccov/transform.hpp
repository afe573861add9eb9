#pragma once

#include "nccov/vspace.hpp"

namespace nccov {

// Two group actions on bases. A passive transformation multiplies basis
// matrices from the left and leaves vectors alone, so coordinates change;
// an active transformation multiplies from the right and moves vectors
// along with the basis, so coordinates stay fixed. The two actions commute
// because the rc-product is associative.

/// Left action on bases. Construction validates rc-nonsingularity and
/// caches the rc-inverse, which every coordinate rule needs.
class PassiveTransform {
 public:
  explicit PassiveTransform(NcMatrix g)
      : g_(std::move(g)), g_inv_(rc_inverse(g_)) {}

  std::size_t dim() const { return g_.rows(); }
  const NcMatrix& matrix() const { return g_; }
  const NcMatrix& inverse_matrix() const { return g_inv_; }

  friend bool operator==(const PassiveTransform& a, const PassiveTransform& b) {
    return a.g_ == b.g_;
  }

  friend bool operator!=(const PassiveTransform& a, const PassiveTransform& b) {
    return !(a == b);
  }

 private:
  NcMatrix g_;
  NcMatrix g_inv_;
};

/// Right action on bases.
class ActiveTransform {
 public:
  explicit ActiveTransform(NcMatrix a) : a_(std::move(a)) {
    if (a_.rows() != a_.cols()) {
      throw ShapeMismatch("active transform must be square, got " +
                          NcMatrix::shape_str(a_));
    }
    if (!is_rc_nonsingular(a_)) {
      throw Singular("active transform has no rc inverse");
    }
  }

  std::size_t dim() const { return a_.rows(); }
  const NcMatrix& matrix() const { return a_; }

  friend bool operator==(const ActiveTransform& a, const ActiveTransform& b) {
    return a.a_ == b.a_;
  }

  friend bool operator!=(const ActiveTransform& a, const ActiveTransform& b) {
    return !(a == b);
  }

 private:
  NcMatrix a_;
};

/// New basis with matrix g * e: basis vector l becomes sum_p g[l][p] e_p.
Basis passive_apply_basis(const PassiveTransform& g, const Basis& e);

/// Coordinate rule paired with passive_apply_basis: given coordinates v2
/// relative to the transformed basis g * e, returns the coordinates
/// v1 = v2 * g of the same vector relative to e.
CoordRow passive_coords_forward(const PassiveTransform& g, const CoordRow& v2);

/// Inverse rule: v2 = v1 * inverse(g).
CoordRow passive_coords_backward(const PassiveTransform& g, const CoordRow& v1);

/// New basis with matrix e * a.
Basis active_apply(const ActiveTransform& a, const Basis& e);

/// The unique passive transform carrying e1 to e2: g = e2 * inverse(e1).
PassiveTransform transition_matrix(const Basis& e1, const Basis& e2);

/// Composite with matrix g2 * g1: applying it equals applying g1 first,
/// then g2.
PassiveTransform compose_passive(const PassiveTransform& g2,
                                 const PassiveTransform& g1);

PassiveTransform inverse_passive(const PassiveTransform& g);

}  // namespace nccov
