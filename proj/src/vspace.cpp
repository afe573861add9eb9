#include "nccov/vspace.hpp"

namespace nccov {

CoordRow expand_in_reference(const CoordRow& v, const Basis& e) {
  return CoordRow(rc_product(v.row(), e.matrix()));
}

CoordRow coords_in_basis(const CoordRow& v_ref, const Basis& e) {
  return CoordRow(rc_product(v_ref.row(), rc_inverse(e.matrix())));
}

CoordRow apply_hom(const HomMatrix& h, const CoordRow& v) {
  return CoordRow(rc_product(v.row(), h.f()));
}

HomMatrix hom_from_matrix(NcMatrix f, Basis basis_in, Basis basis_out) {
  return HomMatrix(std::move(f), std::move(basis_in), std::move(basis_out));
}

const NcMatrix& matrix_of_hom(const HomMatrix& h) { return h.f(); }

HomMatrix compose_homs(const HomMatrix& h1, const HomMatrix& h2) {
  if (h1.basis_out() != h2.basis_in()) {
    throw BasisMismatch(
        "composing homomorphisms across different middle bases");
  }
  return HomMatrix(rc_product(h1.f(), h2.f()), h1.basis_in(), h2.basis_out());
}

HomMatrix inverse_hom(const HomMatrix& h) {
  return HomMatrix(rc_inverse(h.f()), h.basis_out(), h.basis_in());
}

}  // namespace nccov
