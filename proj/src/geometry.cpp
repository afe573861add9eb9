#include "nccov/geometry.hpp"

namespace nccov {

namespace {

// Odometer over index tuples, last position fastest. Returns false after
// the all-zero tuple wraps around.
bool next_tuple(std::vector<std::size_t>& t, std::size_t dim) {
  for (std::size_t pos = t.size(); pos-- > 0;) {
    if (++t[pos] < dim) return true;
    t[pos] = 0;
  }
  return false;
}

void check_same_dim(const TensorPolyMap& a, const PassiveTransform& g) {
  if (a.dim() != g.dim()) {
    throw ShapeMismatch("map over dimension " + std::to_string(a.dim()) +
                        " transformed by " + std::to_string(g.dim()) +
                        "-dimensional transform");
  }
}

}  // namespace

GroupRep trivial_rep(std::size_t dim_w) {
  return GroupRep{dim_w, [dim_w](const NcMatrix&) {
                    return NcMatrix::identity(dim_w);
                  }};
}

GroupRep tautological_rep(std::size_t n) {
  return GroupRep{n, [](const NcMatrix& g) { return g; }};
}

GroupRep broken_rep(std::size_t n) {
  return GroupRep{n, [](const NcMatrix& g) { return rc_product(g, g); }};
}

GeometricObject geo_transform(const GeometricObject& obj,
                              const PassiveTransform& g) {
  const NcMatrix fg = obj.rep().F(g.matrix());
  CoordRow w2(rc_product(obj.coords().row(), rc_inverse(fg)));
  return GeometricObject(obj.rep(), std::move(w2),
                         passive_apply_basis(g, obj.v_basis()));
}

bool rep_action_law_check(const GroupRep& rep, const NcMatrix& g,
                          const NcMatrix& h, const CoordRow& w) {
  const NcMatrix by_g = rc_inverse(rep.F(g));
  const NcMatrix by_h = rc_inverse(rep.F(h));
  const NcMatrix by_hg = rc_inverse(rep.F(rc_product(h, g)));
  const NcMatrix lhs = rc_product(rc_product(w.row(), by_g), by_h);
  const NcMatrix rhs = rc_product(w.row(), by_hg);
  return lhs == rhs;
}

bool on_same_orbit(const GroupRep& rep, const Basis& e1, const CoordRow& w1,
                   const Basis& e2, const CoordRow& w2) {
  if (w1.dim() != rep.dim_w || w2.dim() != rep.dim_w) {
    throw ShapeMismatch("orbit coordinates must have dimension " +
                        std::to_string(rep.dim_w));
  }
  const PassiveTransform g = transition_matrix(e1, e2);
  const NcMatrix expected =
      rc_product(w1.row(), rc_inverse(rep.F(g.matrix())));
  return w2.row() == expected;
}

TensorPolyMap::TensorPolyMap(std::size_t arity, std::size_t dim)
    : arity_(arity), dim_(dim) {
  if (arity_ < 1) {
    throw ArityMismatch("tensor map arity must be at least 1");
  }
  if (dim_ < 1) {
    throw ShapeMismatch("tensor map dimension must be at least 1");
  }
  std::size_t slots = dim_;
  for (std::size_t t = 0; t < arity_; ++t) slots *= dim_;
  slots_.resize(slots);
}

std::size_t TensorPolyMap::slot_index(
    std::size_t i, const std::vector<std::size_t>& js) const {
  if (js.size() != arity_) {
    throw ArityMismatch("index tuple has " + std::to_string(js.size()) +
                        " entries for an arity-" + std::to_string(arity_) +
                        " map");
  }
  if (i >= dim_) {
    throw ShapeMismatch("output index " + std::to_string(i) +
                        " out of range for dimension " + std::to_string(dim_));
  }
  std::size_t idx = i;
  for (const std::size_t j : js) {
    if (j >= dim_) {
      throw ShapeMismatch("input index " + std::to_string(j) +
                          " out of range for dimension " +
                          std::to_string(dim_));
    }
    idx = idx * dim_ + j;
  }
  return idx;
}

void TensorPolyMap::add_term(std::size_t i, const std::vector<std::size_t>& js,
                             Term t) {
  if (t.size() != arity_ + 1) {
    throw ArityMismatch("term has " + std::to_string(t.size()) +
                        " factors, an arity-" + std::to_string(arity_) +
                        " map needs " + std::to_string(arity_ + 1));
  }
  slots_[slot_index(i, js)].push_back(std::move(t));
}

const std::vector<TensorPolyMap::Term>& TensorPolyMap::terms_at(
    std::size_t i, const std::vector<std::size_t>& js) const {
  return slots_[slot_index(i, js)];
}

std::size_t TensorPolyMap::total_terms() const {
  std::size_t n = 0;
  for (const auto& slot : slots_) n += slot.size();
  return n;
}

TensorPolyMap TensorPolyMap::identity_map(std::size_t dim) {
  return from_endo(NcMatrix::identity(dim));
}

TensorPolyMap TensorPolyMap::from_endo(const NcMatrix& f) {
  if (f.rows() != f.cols()) {
    throw ShapeMismatch("endomorphism matrix must be square, got " +
                        NcMatrix::shape_str(f));
  }
  const std::size_t n = f.rows();
  TensorPolyMap a(1, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (f(i, k).is_zero()) continue;
      a.add_term(k, {i}, {Quaternion(1), f(i, k)});
    }
  }
  return a;
}

bool same_term_lists(const TensorPolyMap& a, const TensorPolyMap& b) {
  if (a.arity_ != b.arity_ || a.dim_ != b.dim_) return false;
  if (a.slots_.size() != b.slots_.size()) return false;
  for (std::size_t s = 0; s < a.slots_.size(); ++s) {
    const auto& sa = a.slots_[s];
    const auto& sb = b.slots_[s];
    if (sa.size() != sb.size()) return false;
    for (std::size_t t = 0; t < sa.size(); ++t) {
      if (sa[t] != sb[t]) return false;
    }
  }
  return true;
}

CoordRow apply_linear_tensor(const TensorPolyMap& a, const CoordRow& w) {
  if (a.arity() != 1) {
    throw ArityMismatch("apply_linear_tensor needs an arity-1 map, got " +
                        std::to_string(a.arity()));
  }
  if (a.dim() != w.dim()) {
    throw ShapeMismatch("map over dimension " + std::to_string(a.dim()) +
                        " applied to a " + std::to_string(w.dim()) +
                        "-dimensional row");
  }
  CoordRow out(a.dim());
  std::vector<std::size_t> jv(1, 0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Quaternion acc;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (w[j].is_zero()) continue;
      jv[0] = j;
      for (const auto& t : a.terms_at(i, jv)) {
        acc = acc + t[0] * w[j] * t[1];
      }
    }
    out[i] = acc;
  }
  return out;
}

TensorPolyMap transform_linear_tensor(const TensorPolyMap& a1,
                                      const PassiveTransform& g) {
  if (a1.arity() != 1) {
    throw ArityMismatch("transform_linear_tensor needs an arity-1 map, got " +
                        std::to_string(a1.arity()));
  }
  check_same_dim(a1, g);
  const std::size_t n = a1.dim();
  const NcMatrix& gm = g.matrix();
  const NcMatrix& ginv = g.inverse_matrix();
  TensorPolyMap a2(1, n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (const auto& t : a1.terms_at(i, {j})) {
            a2.add_term(l, {k}, {t[0], gm(k, j) * t[1] * ginv(i, l)});
          }
        }
      }
    }
  }
  return a2;
}

CoordRow apply_polylinear(const TensorPolyMap& a,
                          const std::vector<CoordRow>& vs) {
  if (vs.size() != a.arity()) {
    throw ArityMismatch("arity-" + std::to_string(a.arity()) +
                        " map applied to " + std::to_string(vs.size()) +
                        " arguments");
  }
  for (const CoordRow& v : vs) {
    if (v.dim() != a.dim()) {
      throw ShapeMismatch("map over dimension " + std::to_string(a.dim()) +
                          " applied to a " + std::to_string(v.dim()) +
                          "-dimensional row");
    }
  }
  const std::size_t n = a.arity();
  CoordRow out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Quaternion acc;
    std::vector<std::size_t> js(n, 0);
    do {
      bool zero = false;
      for (std::size_t t = 0; t < n; ++t) {
        if (vs[t][js[t]].is_zero()) {
          zero = true;
          break;
        }
      }
      if (zero) continue;
      for (const auto& term : a.terms_at(i, js)) {
        Quaternion prod = term[0];
        for (std::size_t t = 0; t < n; ++t) {
          prod = prod * vs[t][js[t]] * term[t + 1];
        }
        acc = acc + prod;
      }
    } while (next_tuple(js, a.dim()));
    out[i] = acc;
  }
  return out;
}

TensorPolyMap transform_polylinear(const TensorPolyMap& a1,
                                   const PassiveTransform& g) {
  check_same_dim(a1, g);
  const std::size_t n = a1.arity();
  const std::size_t dim = a1.dim();
  const NcMatrix& gm = g.matrix();
  const NcMatrix& ginv = g.inverse_matrix();
  TensorPolyMap a2(n, dim);
  for (std::size_t l = 0; l < dim; ++l) {
    std::vector<std::size_t> ks(n, 0);
    do {
      for (std::size_t i = 0; i < dim; ++i) {
        std::vector<std::size_t> js(n, 0);
        do {
          for (const auto& t : a1.terms_at(i, js)) {
            TensorPolyMap::Term nt(n + 1);
            nt[0] = t[0];
            for (std::size_t p = 0; p < n; ++p) {
              nt[p + 1] = gm(ks[p], js[p]) * t[p + 1];
            }
            nt[n] = nt[n] * ginv(i, l);
            a2.add_term(l, ks, std::move(nt));
          }
        } while (next_tuple(js, dim));
      }
    } while (next_tuple(ks, dim));
  }
  return a2;
}

bool covariance_check_linear(const TensorPolyMap& a1, const PassiveTransform& g,
                             const CoordRow& v2) {
  const TensorPolyMap a2 = transform_linear_tensor(a1, g);
  const CoordRow v1 = passive_coords_forward(g, v2);
  const Basis e2(g.matrix());
  const CoordRow lhs = expand_in_reference(apply_linear_tensor(a2, v2), e2);
  const CoordRow rhs = apply_linear_tensor(a1, v1);
  return lhs == rhs;
}

bool covariance_check_polylinear(const TensorPolyMap& a1,
                                 const PassiveTransform& g,
                                 const std::vector<CoordRow>& vs2) {
  const TensorPolyMap a2 = transform_polylinear(a1, g);
  std::vector<CoordRow> vs1;
  vs1.reserve(vs2.size());
  for (const CoordRow& v2 : vs2) vs1.push_back(passive_coords_forward(g, v2));
  const Basis e2(g.matrix());
  const CoordRow lhs = expand_in_reference(apply_polylinear(a2, vs2), e2);
  const CoordRow rhs = apply_polylinear(a1, vs1);
  return lhs == rhs;
}

bool maps_equal(const TensorPolyMap& a, const TensorPolyMap& b) {
  if (a.arity() != b.arity()) {
    throw ArityMismatch("comparing maps of arity " + std::to_string(a.arity()) +
                        " and " + std::to_string(b.arity()));
  }
  if (a.dim() != b.dim()) {
    throw ShapeMismatch("comparing maps over dimensions " +
                        std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()));
  }
  const std::size_t n = a.arity();
  const std::size_t dim = a.dim();
  const auto d_basis = Quaternion::d_basis();
  // Each slot choice is a (unit position, basis scaling) pair; the odometer
  // runs over all (4 * dim)^n of them.
  std::vector<std::size_t> choice(n, 0);
  std::vector<CoordRow> vs(n, CoordRow(dim));
  do {
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t pos = choice[t] / 4;
      const std::size_t axis = choice[t] % 4;
      vs[t] = scalar_left_mul(d_basis[axis], CoordRow::unit(dim, pos));
    }
    if (apply_polylinear(a, vs) != apply_polylinear(b, vs)) return false;
  } while (next_tuple(choice, 4 * dim));
  return true;
}

CoordRow skew_apply(const TensorPolyMap& h, const CoordRow& u,
                    const CoordRow& v) {
  if (h.arity() != 2) {
    throw ArityMismatch("skew_apply needs an arity-2 map, got " +
                        std::to_string(h.arity()));
  }
  const CoordRow uv = apply_polylinear(h, {u, v});
  const CoordRow vu = apply_polylinear(h, {v, u});
  return scalar_left_mul(Quaternion(Rational(1, 2)), uv - vu);
}

DetStar detstar(const Quaternion& uj, const Quaternion& vj,
                const Quaternion& uk, const Quaternion& vk) {
  return DetStar{uj, vk, vj, uk};
}

Quaternion contract3(const TensorPolyMap::Term& t, const DetStar& d) {
  if (t.size() != 3) {
    throw ArityMismatch("detstar contraction needs a 3-factor term, got " +
                        std::to_string(t.size()));
  }
  return t[0] * d.pos_first * t[1] * d.pos_second * t[2] -
         t[0] * d.neg_first * t[1] * d.neg_second * t[2];
}

CoordRow skew_apply_det(const TensorPolyMap& h, const CoordRow& u,
                        const CoordRow& v) {
  if (h.arity() != 2) {
    throw ArityMismatch("skew_apply_det needs an arity-2 map, got " +
                        std::to_string(h.arity()));
  }
  if (u.dim() != h.dim() || v.dim() != h.dim()) {
    throw ShapeMismatch("map over dimension " + std::to_string(h.dim()) +
                        " applied to rows of dimension " +
                        std::to_string(u.dim()) + " and " +
                        std::to_string(v.dim()));
  }
  const Quaternion half{Rational(1, 2)};
  CoordRow out(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Quaternion acc;
    for (std::size_t j = 0; j < h.dim(); ++j) {
      for (std::size_t k = 0; k < h.dim(); ++k) {
        const DetStar d = detstar(u[j], v[j], u[k], v[k]);
        for (const auto& t : h.terms_at(i, {j, k})) {
          acc = acc + contract3(t, d);
        }
      }
    }
    out[i] = half * acc;
  }
  return out;
}

bool skew_transform_check(const TensorPolyMap& h1, const PassiveTransform& g) {
  if (h1.arity() != 2) {
    throw ArityMismatch("skew_transform_check needs an arity-2 map, got " +
                        std::to_string(h1.arity()));
  }
  check_same_dim(h1, g);
  const std::size_t dim = h1.dim();
  const TensorPolyMap h2 = transform_polylinear(h1, g);
  const Basis e2(g.matrix());
  const auto d_basis = Quaternion::d_basis();
  for (std::size_t q = 0; q < dim; ++q) {
    for (std::size_t r = 0; r < dim; ++r) {
      for (const Quaternion& du : d_basis) {
        for (const Quaternion& dv : d_basis) {
          const CoordRow u2 = scalar_left_mul(du, CoordRow::unit(dim, q));
          const CoordRow v2 = scalar_left_mul(dv, CoordRow::unit(dim, r));
          const CoordRow u1 = passive_coords_forward(g, u2);
          const CoordRow v1 = passive_coords_forward(g, v2);
          const CoordRow lhs =
              expand_in_reference(skew_apply(h2, u2, v2), e2);
          const CoordRow rhs = skew_apply(h1, u1, v1);
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

HomMatrix endo_transform(const HomMatrix& f1, const PassiveTransform& g) {
  if (f1.n_in() != f1.n_out()) {
    throw ShapeMismatch("endo_transform needs a square matrix, got " +
                        NcMatrix::shape_str(f1.f()));
  }
  if (f1.n_in() != g.dim()) {
    throw ShapeMismatch("endomorphism over dimension " +
                        std::to_string(f1.n_in()) + " transformed by " +
                        std::to_string(g.dim()) + "-dimensional transform");
  }
  NcMatrix f2 = rc_product(rc_product(g.matrix(), f1.f()), g.inverse_matrix());
  return HomMatrix(std::move(f2), passive_apply_basis(g, f1.basis_in()),
                   passive_apply_basis(g, f1.basis_out()));
}

}  // namespace nccov
