#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "nccov/transform.hpp"

namespace nccov {

/// Representation of the basis symmetry group on a coordinate space of
/// dimension dim_w: F sends every rc-nonsingular matrix to an
/// rc-nonsingular dim_w x dim_w matrix. The homomorphism law
/// F(g * h) = F(g) * F(h) is the caller's obligation; rep_action_law_check
/// samples it.
struct GroupRep {
  std::size_t dim_w;
  std::function<NcMatrix(const NcMatrix&)> F;
};

/// F(g) = identity: coordinates that never change.
GroupRep trivial_rep(std::size_t dim_w);

/// F(g) = g: coordinates that change exactly like vector coordinates.
GroupRep tautological_rep(std::size_t n);

/// F(g) = g * g. Not a homomorphism over a non-commutative algebra; a
/// negative control for rep_action_law_check and the geo suite.
GroupRep broken_rep(std::size_t n);

/// Coordinates w relative to the current basis of V, together with the
/// representation governing how they respond to a change of that basis.
class GeometricObject {
 public:
  GeometricObject(GroupRep rep, CoordRow w, Basis v_basis)
      : rep_(std::move(rep)), w_(std::move(w)), v_basis_(std::move(v_basis)) {
    if (w_.dim() != rep_.dim_w) {
      throw ShapeMismatch("object coordinates have dimension " +
                          std::to_string(w_.dim()) + ", representation needs " +
                          std::to_string(rep_.dim_w));
    }
  }

  const GroupRep& rep() const { return rep_; }
  const CoordRow& coords() const { return w_; }
  const Basis& v_basis() const { return v_basis_; }

 private:
  GroupRep rep_;
  CoordRow w_;
  Basis v_basis_;
};

/// Passive transformation of the underlying basis: the new coordinates are
/// w * inverse(F(g)) and the carried basis becomes g * e.
GeometricObject geo_transform(const GeometricObject& obj,
                              const PassiveTransform& g);

/// True iff acting on w by g and then by h equals acting once by the
/// composite h * g:  (w * F(g)^-1) * F(h)^-1 = w * F(h * g)^-1.
bool rep_action_law_check(const GroupRep& rep, const NcMatrix& g,
                          const NcMatrix& h, const CoordRow& w);

/// True iff (e2, w2) is the geo_transform image of (e1, w1) under the
/// unique passive transform carrying e1 to e2.
bool on_same_orbit(const GroupRep& rep, const Basis& e1, const CoordRow& w1,
                   const Basis& e2, const CoordRow& w2);

/// Coordinates of an n-linear map V x ... x V -> V as tensor sums: for each
/// output index i and input index tuple (j_1..j_n), a list of terms, each an
/// (n+1)-tuple of quaternions (t_0, ..., t_n) acting by
/// (v_1, ..., v_n) -> t_0 * v_1[j_1] * t_1 * ... * v_n[j_n] * t_n.
/// Term lists are kept unnormalized; semantic equality is maps_equal.
class TensorPolyMap {
 public:
  using Term = std::vector<Quaternion>;

  TensorPolyMap(std::size_t arity, std::size_t dim);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }

  /// Appends one term; t must hold exactly arity+1 factors.
  void add_term(std::size_t i, const std::vector<std::size_t>& js, Term t);

  const std::vector<Term>& terms_at(std::size_t i,
                                    const std::vector<std::size_t>& js) const;

  std::size_t total_terms() const;

  /// Arity-1 map sending every coordinate row to itself.
  static TensorPolyMap identity_map(std::size_t dim);

  /// Arity-1 map applying a square endomorphism matrix the way apply_hom
  /// does: out[k] = sum_i v[i] * f[i][k].
  static TensorPolyMap from_endo(const NcMatrix& f);

  /// Structural comparison of term lists (order-sensitive). Distinct term
  /// lists can still denote the same map; use maps_equal for that.
  friend bool same_term_lists(const TensorPolyMap& a, const TensorPolyMap& b);

 private:
  std::size_t slot_index(std::size_t i,
                         const std::vector<std::size_t>& js) const;

  std::size_t arity_;
  std::size_t dim_;
  std::vector<std::vector<Term>> slots_;
};

bool same_term_lists(const TensorPolyMap& a, const TensorPolyMap& b);

/// out[i] = sum_j sum_s t_0 * w[j] * t_1 over the terms at (i, j).
CoordRow apply_linear_tensor(const TensorPolyMap& a, const CoordRow& w);

/// Coordinates of the same linear map relative to the basis g * e: the term
/// (t_0, t_1) at (i, j) contributes (t_0, g[k][j] * t_1 * ginv[i][l]) to
/// every slot (l, k).
TensorPolyMap transform_linear_tensor(const TensorPolyMap& a1,
                                      const PassiveTransform& g);

/// out[i] = sum over tuples and terms of
/// t_0 * v_1[j_1] * t_1 * ... * v_n[j_n] * t_n.
CoordRow apply_polylinear(const TensorPolyMap& a,
                          const std::vector<CoordRow>& vs);

/// n-linear generalization of transform_linear_tensor: middle factor t gets
/// g[k_t][j_t] on the left, the last factor additionally ginv[i][l] on the
/// right.
TensorPolyMap transform_polylinear(const TensorPolyMap& a1,
                                   const PassiveTransform& g);

/// Exactness of the coordinate change for linear maps: the image computed
/// in the transformed basis, expanded to the reference frame, equals the
/// image computed in the original basis. v2 is relative to the transformed
/// basis.
bool covariance_check_linear(const TensorPolyMap& a1, const PassiveTransform& g,
                             const CoordRow& v2);

bool covariance_check_polylinear(const TensorPolyMap& a1,
                                 const PassiveTransform& g,
                                 const std::vector<CoordRow>& vs2);

/// Extensional equality: agreement on every input tuple built from unit
/// rows scaled by 1, i, j, k. Complete because each slot acts linearly over
/// the rational center and 1, i, j, k span the algebra over it.
bool maps_equal(const TensorPolyMap& a, const TensorPolyMap& b);

/// Antisymmetrized action of an arity-2 map:
/// (apply(h, [u,v]) - apply(h, [v,u])) / 2.
CoordRow skew_apply(const TensorPolyMap& h, const CoordRow& u,
                    const CoordRow& v);

/// Formal antisymmetrized pair u^j (x) v^k - v^j (x) u^k awaiting
/// contraction by a 3-factor term.
struct DetStar {
  Quaternion pos_first, pos_second;
  Quaternion neg_first, neg_second;
};

DetStar detstar(const Quaternion& uj, const Quaternion& vj,
                const Quaternion& uk, const Quaternion& vk);

/// t_0 * x * t_1 * y * t_2 summed with signs over the two pairs of d.
Quaternion contract3(const TensorPolyMap::Term& t, const DetStar& d);

/// skew_apply computed through detstar contractions instead of two
/// apply_polylinear passes; the two routes agree on every input.
CoordRow skew_apply_det(const TensorPolyMap& h, const CoordRow& u,
                        const CoordRow& v);

/// Exhaustive skew covariance: for every pair of unit-row positions and
/// every pair of scalings by 1, i, j, k, the antisymmetrized image in the
/// transformed basis, expanded to the reference frame, equals the one in
/// the original basis.
bool skew_transform_check(const TensorPolyMap& h1, const PassiveTransform& g);

/// Matrix of the same endomorphism relative to the basis g * e:
/// f2 = g * f1 * inverse(g), bases carried along.
HomMatrix endo_transform(const HomMatrix& f1, const PassiveTransform& g);

}  // namespace nccov
