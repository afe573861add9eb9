#include "nccov/transform.hpp"

namespace nccov {

Basis passive_apply_basis(const PassiveTransform& g, const Basis& e) {
  return Basis(rc_product(g.matrix(), e.matrix()));
}

CoordRow passive_coords_forward(const PassiveTransform& g, const CoordRow& v2) {
  return CoordRow(rc_product(v2.row(), g.matrix()));
}

CoordRow passive_coords_backward(const PassiveTransform& g, const CoordRow& v1) {
  return CoordRow(rc_product(v1.row(), g.inverse_matrix()));
}

Basis active_apply(const ActiveTransform& a, const Basis& e) {
  return Basis(rc_product(e.matrix(), a.matrix()));
}

PassiveTransform transition_matrix(const Basis& e1, const Basis& e2) {
  if (e1.dim() != e2.dim()) {
    throw ShapeMismatch("transition between bases of dimension " +
                        std::to_string(e1.dim()) + " and " +
                        std::to_string(e2.dim()));
  }
  return PassiveTransform(rc_product(e2.matrix(), rc_inverse(e1.matrix())));
}

PassiveTransform compose_passive(const PassiveTransform& g2,
                                 const PassiveTransform& g1) {
  return PassiveTransform(rc_product(g2.matrix(), g1.matrix()));
}

PassiveTransform inverse_passive(const PassiveTransform& g) {
  return PassiveTransform(g.inverse_matrix());
}

}  // namespace nccov
