#include "nccov/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "json.hpp"
#include "nccov/text.hpp"

namespace nccov {

namespace {

using json = nlohmann::ordered_json;

bool next_tuple(std::vector<std::size_t>& t, std::size_t dim) {
  for (std::size_t pos = t.size(); pos-- > 0;) {
    if (++t[pos] < dim) return true;
    t[pos] = 0;
  }
  return false;
}

std::size_t draw_dim(SplitMix64& rng, std::size_t cap) {
  return 1 + static_cast<std::size_t>(rng.below(cap));
}

// The product the hook-aware properties use. With flip_product_order the
// scalar factors of every contraction are multiplied in the wrong order,
// which is invisible over a commutative algebra and must be caught here.
NcMatrix hooked_rc(const SuiteHooks& hooks, const NcMatrix& a,
                   const NcMatrix& b) {
  if (!hooks.flip_product_order) return rc_product(a, b);
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("rc_product of " + NcMatrix::shape_str(a) + " and " +
                        NcMatrix::shape_str(b));
  }
  NcMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Quaternion s;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        s = s + b(k, j) * a(i, k);
      }
      m(i, j) = s;
    }
  }
  return m;
}

std::string describe(std::initializer_list<std::pair<const char*, std::string>>
                         fields) {
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += "; ";
    out += key;
    out += "=";
    out += value;
  }
  return out;
}

TensorPolyMap copy_map(const TensorPolyMap& a) { return a; }

struct Property {
  const char* suite;
  const char* name;
  const char* law;
  std::function<bool(const SuiteConfig&, const SuiteHooks&, SplitMix64&,
                     std::string&)>
      run;
  // Grid-sweep properties cost orders of magnitude more per trial than the
  // point checks, so they run cfg.trials / trial_divisor trials (at least
  // one). The report carries the count actually run.
  std::size_t trial_divisor = 1;
};

// ---- matrix ----------------------------------------------------------

const Property kMatrixProps[] = {
    {"matrix", "matrix/rc-associativity",
     "(a*b)*c = a*(b*c) for the row-over-column product",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t p = draw_dim(rng, cfg.dim);
       const std::size_t q = draw_dim(rng, cfg.dim);
       const std::size_t r = draw_dim(rng, cfg.dim);
       const std::size_t s = draw_dim(rng, cfg.dim);
       const NcMatrix a = random_matrix(rng, p, q);
       const NcMatrix b = random_matrix(rng, q, r);
       const NcMatrix c = random_matrix(rng, r, s);
       if (rc_product(rc_product(a, b), c) == rc_product(a, rc_product(b, c)))
         return true;
       cx = describe({{"a", to_text(a)}, {"b", to_text(b)}, {"c", to_text(c)}});
       return false;
     }},
    {"matrix", "matrix/rc-left-distributivity", "a*(b+c) = a*b + a*c",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t p = draw_dim(rng, cfg.dim);
       const std::size_t q = draw_dim(rng, cfg.dim);
       const std::size_t r = draw_dim(rng, cfg.dim);
       const NcMatrix a = random_matrix(rng, p, q);
       const NcMatrix b = random_matrix(rng, q, r);
       const NcMatrix c = random_matrix(rng, q, r);
       if (rc_product(a, b + c) == rc_product(a, b) + rc_product(a, c))
         return true;
       cx = describe({{"a", to_text(a)}, {"b", to_text(b)}, {"c", to_text(c)}});
       return false;
     }},
    {"matrix", "matrix/rc-right-distributivity", "(a+b)*c = a*c + b*c",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t p = draw_dim(rng, cfg.dim);
       const std::size_t q = draw_dim(rng, cfg.dim);
       const std::size_t r = draw_dim(rng, cfg.dim);
       const NcMatrix a = random_matrix(rng, p, q);
       const NcMatrix b = random_matrix(rng, p, q);
       const NcMatrix c = random_matrix(rng, q, r);
       if (rc_product(a + b, c) == rc_product(a, c) + rc_product(b, c))
         return true;
       cx = describe({{"a", to_text(a)}, {"b", to_text(b)}, {"c", to_text(c)}});
       return false;
     }},
    {"matrix", "matrix/inverse-two-sided",
     "g*inverse(g) = inverse(g)*g = identity",
     [](const SuiteConfig& cfg, const SuiteHooks& hooks, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const NcMatrix g = random_rc_nonsingular(rng, n);
       const NcMatrix ginv = rc_inverse(g);
       const NcMatrix id = NcMatrix::identity(n);
       if (hooked_rc(hooks, g, ginv) == id && hooked_rc(hooks, ginv, g) == id)
         return true;
       cx = describe({{"g", to_text(g)}, {"inverse", to_text(ginv)}});
       return false;
     }},
    {"matrix", "matrix/inverse-antihomomorphism",
     "inverse(g*h) = inverse(h)*inverse(g)",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const NcMatrix g = random_rc_nonsingular(rng, n);
       const NcMatrix h = random_rc_nonsingular(rng, n);
       if (rc_inverse(rc_product(g, h)) ==
           rc_product(rc_inverse(h), rc_inverse(g)))
         return true;
       cx = describe({{"g", to_text(g)}, {"h", to_text(h)}});
       return false;
     }},
    {"matrix", "matrix/cr-transpose-bridge",
     "cr(a,b) equals the rc-product of the transposes",
     [](const SuiteConfig& cfg, const SuiteHooks& hooks, SplitMix64& rng,
        std::string& cx) {
       const std::size_t p = draw_dim(rng, cfg.dim);
       const std::size_t q = draw_dim(rng, cfg.dim);
       const std::size_t r = draw_dim(rng, cfg.dim);
       const NcMatrix a = random_matrix(rng, p, q);
       const NcMatrix b = random_matrix(rng, r, p);
       if (cr_product(a, b) == hooked_rc(hooks, transpose(a), transpose(b)))
         return true;
       cx = describe({{"a", to_text(a)}, {"b", to_text(b)}});
       return false;
     }},
    {"matrix", "matrix/cr-rc-disagreement",
     "the two products differ on a fixed 2x2 witness, even after "
     "transposition and swapping",
     [](const SuiteConfig&, const SuiteHooks&, SplitMix64&, std::string& cx) {
       const Quaternion qi = Quaternion::i();
       const Quaternion qj = Quaternion::j();
       const Quaternion qk = Quaternion::k();
       const NcMatrix a{{qi, qj}, {qk, Quaternion(1)}};
       const NcMatrix b{{qj, Quaternion(1)}, {Quaternion(1), qk}};
       const NcMatrix cr = cr_product(a, b);
       const NcMatrix ab = rc_product(a, b);
       const NcMatrix ba = rc_product(b, a);
       if (cr != ab && cr != transpose(ab) && cr != ba && cr != transpose(ba))
         return true;
       cx = describe({{"a", to_text(a)},
                      {"b", to_text(b)},
                      {"cr", to_text(cr)},
                      {"rc", to_text(ab)}});
       return false;
     }},
    {"matrix", "matrix/scalar-left-assoc",
     "a left scalar slides into the left factor of the product",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t p = draw_dim(rng, cfg.dim);
       const std::size_t q = draw_dim(rng, cfg.dim);
       const std::size_t r = draw_dim(rng, cfg.dim);
       const Quaternion s = random_quaternion(rng);
       const NcMatrix a = random_matrix(rng, p, q);
       const NcMatrix b = random_matrix(rng, q, r);
       if (scalar_left_mul(s, rc_product(a, b)) ==
           rc_product(scalar_left_mul(s, a), b))
         return true;
       cx = describe({{"s", to_text(s)}, {"a", to_text(a)}, {"b", to_text(b)}});
       return false;
     }},
};

// ---- vspace ----------------------------------------------------------

const Property kVspaceProps[] = {
    {"vspace", "vspace/expand-coords-roundtrip",
     "coordinates relative to a basis and reference expansion are mutually "
     "inverse",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const Basis e = random_basis(rng, n);
       const CoordRow v = random_coord_row(rng, n);
       const CoordRow vr = random_coord_row(rng, n);
       if (coords_in_basis(expand_in_reference(v, e), e) == v &&
           expand_in_reference(coords_in_basis(vr, e), e) == vr)
         return true;
       cx = describe({{"e", to_text(e.matrix())}, {"v", to_text(v.row())}});
       return false;
     }},
    {"vspace", "vspace/apply-hom-additive", "f(u+v) = f(u) + f(v)",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n_in = draw_dim(rng, cfg.dim);
       const std::size_t n_out = draw_dim(rng, cfg.dim);
       const HomMatrix h(random_matrix(rng, n_in, n_out),
                         random_basis(rng, n_in), random_basis(rng, n_out));
       const CoordRow u = random_coord_row(rng, n_in);
       const CoordRow v = random_coord_row(rng, n_in);
       if (apply_hom(h, u + v) == apply_hom(h, u) + apply_hom(h, v))
         return true;
       cx = describe({{"f", to_text(h.f())},
                      {"u", to_text(u.row())},
                      {"v", to_text(v.row())}});
       return false;
     }},
    {"vspace", "vspace/apply-hom-left-homogeneous",
     "f(a*v) = a*f(v) for a left scalar a",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n_in = draw_dim(rng, cfg.dim);
       const std::size_t n_out = draw_dim(rng, cfg.dim);
       const HomMatrix h(random_matrix(rng, n_in, n_out),
                         random_basis(rng, n_in), random_basis(rng, n_out));
       const Quaternion a = random_quaternion(rng);
       const CoordRow v = random_coord_row(rng, n_in);
       if (apply_hom(h, scalar_left_mul(a, v)) ==
           scalar_left_mul(a, apply_hom(h, v)))
         return true;
       cx = describe(
           {{"f", to_text(h.f())}, {"a", to_text(a)}, {"v", to_text(v.row())}});
       return false;
     }},
    {"vspace", "vspace/hom-matrix-roundtrip",
     "a homomorphism and its matrix determine each other; unit rows recover "
     "the matrix rows",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n_in = draw_dim(rng, cfg.dim);
       const std::size_t n_out = draw_dim(rng, cfg.dim);
       const NcMatrix f = random_matrix(rng, n_in, n_out);
       const Basis e1 = random_basis(rng, n_in);
       const Basis e2 = random_basis(rng, n_out);
       const HomMatrix h = hom_from_matrix(f, e1, e2);
       if (matrix_of_hom(h) != f) {
         cx = describe({{"f", to_text(f)}});
         return false;
       }
       for (std::size_t i = 0; i < n_in; ++i) {
         const CoordRow image = apply_hom(h, CoordRow::unit(n_in, i));
         for (std::size_t k = 0; k < n_out; ++k) {
           if (image[k] != f(i, k)) {
             cx = describe({{"f", to_text(f)}, {"row", std::to_string(i)}});
             return false;
           }
         }
       }
       return true;
     }},
    {"vspace", "vspace/hom-uniqueness",
     "distinct matrices give homomorphisms that differ on some unit row",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n_in = draw_dim(rng, cfg.dim);
       const std::size_t n_out = draw_dim(rng, cfg.dim);
       const NcMatrix f = random_matrix(rng, n_in, n_out);
       NcMatrix f2 = f;
       const std::size_t pi = rng.below(n_in);
       const std::size_t pj = rng.below(n_out);
       f2(pi, pj) = f2(pi, pj) + Quaternion(1);
       const Basis e1 = random_basis(rng, n_in);
       const Basis e2 = random_basis(rng, n_out);
       const HomMatrix h = hom_from_matrix(f, e1, e2);
       const HomMatrix h2 = hom_from_matrix(f2, e1, e2);
       for (std::size_t i = 0; i < n_in; ++i) {
         const CoordRow unit = CoordRow::unit(n_in, i);
         if (apply_hom(h, unit) != apply_hom(h2, unit)) return true;
       }
       cx = describe({{"f", to_text(f)}, {"f2", to_text(f2)}});
       return false;
     }},
    {"vspace", "vspace/compose-sequential",
     "the matrix of a composite is the rc-product of the matrices",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n1 = draw_dim(rng, cfg.dim);
       const std::size_t n2 = draw_dim(rng, cfg.dim);
       const std::size_t n3 = draw_dim(rng, cfg.dim);
       const Basis e1 = random_basis(rng, n1);
       const Basis e2 = random_basis(rng, n2);
       const Basis e3 = random_basis(rng, n3);
       const HomMatrix h1(random_matrix(rng, n1, n2), e1, e2);
       const HomMatrix h2(random_matrix(rng, n2, n3), e2, e3);
       const CoordRow v = random_coord_row(rng, n1);
       if (apply_hom(compose_homs(h1, h2), v) == apply_hom(h2, apply_hom(h1, v)))
         return true;
       cx = describe({{"f1", to_text(h1.f())},
                      {"f2", to_text(h2.f())},
                      {"v", to_text(v.row())}});
       return false;
     }},
    {"vspace", "vspace/automorphism-group",
     "automorphisms form a group under composition and inversion",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const Basis e = random_basis(rng, n);
       const HomMatrix a(random_rc_nonsingular(rng, n), e, e);
       const HomMatrix b(random_rc_nonsingular(rng, n), e, e);
       const HomMatrix c(random_rc_nonsingular(rng, n), e, e);
       const HomMatrix id(NcMatrix::identity(n), e, e);
       const bool assoc =
           matrix_of_hom(compose_homs(compose_homs(a, b), c)) ==
           matrix_of_hom(compose_homs(a, compose_homs(b, c)));
       const bool neutral =
           matrix_of_hom(compose_homs(a, id)) == matrix_of_hom(a) &&
           matrix_of_hom(compose_homs(id, a)) == matrix_of_hom(a);
       const bool inverse =
           matrix_of_hom(compose_homs(a, inverse_hom(a))) ==
           NcMatrix::identity(n);
       if (assoc && neutral && inverse) return true;
       cx = describe({{"a", to_text(a.f())},
                      {"b", to_text(b.f())},
                      {"c", to_text(c.f())}});
       return false;
     }},
    {"vspace", "vspace/expand-injective",
     "distinct coordinates expand to distinct reference coordinates",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const Basis e = random_basis(rng, n);
       const CoordRow u = random_coord_row(rng, n);
       CoordRow v = u;
       v[rng.below(n)] = v[rng.below(n)] + random_nonzero_quaternion(rng);
       if (v == u) return true;  // same index drew a compensating zero sum
       if (expand_in_reference(u, e) != expand_in_reference(v, e)) return true;
       cx = describe({{"e", to_text(e.matrix())},
                      {"u", to_text(u.row())},
                      {"v", to_text(v.row())}});
       return false;
     }},
};

// ---- transform -------------------------------------------------------

const Property kTransformProps[] = {
    {"transform", "transform/passive-active-commute",
     "passive (left) and active (right) basis actions commute",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const PassiveTransform g = random_passive(rng, n);
       const ActiveTransform a = random_active(rng, n);
       const Basis e = random_basis(rng, n);
       if (passive_apply_basis(g, active_apply(a, e)) ==
           active_apply(a, passive_apply_basis(g, e)))
         return true;
       cx = describe({{"g", to_text(g.matrix())},
                      {"a", to_text(a.matrix())},
                      {"e", to_text(e.matrix())}});
       return false;
     }},
    {"transform", "transform/transition-reaches-target",
     "the transition transform carries the first basis to the second",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const Basis e1 = random_basis(rng, n);
       const Basis e2 = random_basis(rng, n);
       if (passive_apply_basis(transition_matrix(e1, e2), e1) == e2)
         return true;
       cx = describe({{"e1", to_text(e1.matrix())}, {"e2", to_text(e2.matrix())}});
       return false;
     }},
    {"transform", "transform/transition-recovers-planted",
     "the transition transform recovers the transform that produced the pair",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const Basis e1 = random_basis(rng, n);
       const PassiveTransform g = random_passive(rng, n);
       const Basis e2 = passive_apply_basis(g, e1);
       if (transition_matrix(e1, e2) == g) return true;
       cx = describe({{"e1", to_text(e1.matrix())}, {"g", to_text(g.matrix())}});
       return false;
     }},
    {"transform", "transform/coords-consistency",
     "old coordinates v1 = v2*g describe the same vector: expansions agree",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const Basis e1 = random_basis(rng, n);
       const PassiveTransform g = random_passive(rng, n);
       const Basis e2 = passive_apply_basis(g, e1);
       const CoordRow v2 = random_coord_row(rng, n);
       const CoordRow v1 = passive_coords_forward(g, v2);
       if (expand_in_reference(v2, e2) == expand_in_reference(v1, e1))
         return true;
       cx = describe({{"e1", to_text(e1.matrix())},
                      {"g", to_text(g.matrix())},
                      {"v2", to_text(v2.row())}});
       return false;
     }},
    {"transform", "transform/coords-roundtrip",
     "v2 = v1*inverse(g) inverts v1 = v2*g",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const PassiveTransform g = random_passive(rng, n);
       const CoordRow v = random_coord_row(rng, n);
       if (passive_coords_backward(g, passive_coords_forward(g, v)) == v &&
           passive_coords_forward(g, passive_coords_backward(g, v)) == v)
         return true;
       cx = describe({{"g", to_text(g.matrix())}, {"v", to_text(v.row())}});
       return false;
     }},
    {"transform", "transform/active-synchronicity",
     "an active transformation moves vectors with the basis, so coordinates "
     "stay fixed",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const Basis e = random_basis(rng, n);
       const ActiveTransform a = random_active(rng, n);
       const CoordRow v = random_coord_row(rng, n);
       const CoordRow moved_ref(
           rc_product(expand_in_reference(v, e).row(), a.matrix()));
       if (coords_in_basis(moved_ref, active_apply(a, e)) == v) return true;
       cx = describe({{"e", to_text(e.matrix())},
                      {"a", to_text(a.matrix())},
                      {"v", to_text(v.row())}});
       return false;
     }},
    {"transform", "transform/coords-rule-linear",
     "the coordinate rule is additive and commutes with left scalars",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const PassiveTransform g = random_passive(rng, n);
       const CoordRow u = random_coord_row(rng, n);
       const CoordRow v = random_coord_row(rng, n);
       const Quaternion a = random_quaternion(rng);
       const bool additive = passive_coords_forward(g, u + v) ==
                             passive_coords_forward(g, u) +
                                 passive_coords_forward(g, v);
       const bool homogeneous =
           passive_coords_forward(g, scalar_left_mul(a, v)) ==
           scalar_left_mul(a, passive_coords_forward(g, v));
       if (additive && homogeneous) return true;
       cx = describe({{"g", to_text(g.matrix())},
                      {"u", to_text(u.row())},
                      {"v", to_text(v.row())},
                      {"a", to_text(a)}});
       return false;
     }},
    {"transform", "transform/compose-sequential",
     "applying g1 then g2 equals applying the composite g2*g1",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const PassiveTransform g1 = random_passive(rng, n);
       const PassiveTransform g2 = random_passive(rng, n);
       const Basis e = random_basis(rng, n);
       const bool sequential =
           passive_apply_basis(compose_passive(g2, g1), e) ==
           passive_apply_basis(g2, passive_apply_basis(g1, e));
       const bool inverse_law =
           compose_passive(inverse_passive(g1), g1).matrix() ==
           NcMatrix::identity(n);
       if (sequential && inverse_law) return true;
       cx = describe({{"g1", to_text(g1.matrix())},
                      {"g2", to_text(g2.matrix())},
                      {"e", to_text(e.matrix())}});
       return false;
     }},
    {"transform", "transform/coords-contravariance",
     "coordinate rules compose in the reverse order of basis transforms",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const PassiveTransform g1 = random_passive(rng, n);
       const PassiveTransform g2 = random_passive(rng, n);
       const CoordRow v = random_coord_row(rng, n);
       if (passive_coords_forward(compose_passive(g2, g1), v) ==
           passive_coords_forward(g1, passive_coords_forward(g2, v)))
         return true;
       cx = describe({{"g1", to_text(g1.matrix())},
                      {"g2", to_text(g2.matrix())},
                      {"v", to_text(v.row())}});
       return false;
     }},
    {"transform", "transform/active-representation",
     "acting by a then b on a basis equals acting once by a*b",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const ActiveTransform a = random_active(rng, n);
       const ActiveTransform b = random_active(rng, n);
       const Basis e = random_basis(rng, n);
       const ActiveTransform ab(rc_product(a.matrix(), b.matrix()));
       if (active_apply(b, active_apply(a, e)) == active_apply(ab, e))
         return true;
       cx = describe({{"a", to_text(a.matrix())},
                      {"b", to_text(b.matrix())},
                      {"e", to_text(e.matrix())}});
       return false;
     }},
};

// ---- linear ----------------------------------------------------------

const Property kLinearProps[] = {
    {"linear", "linear/identity-map-neutral",
     "the identity tensor map fixes every coordinate row",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const CoordRow v = random_coord_row(rng, n);
       if (apply_linear_tensor(TensorPolyMap::identity_map(n), v) == v)
         return true;
       cx = describe({{"v", to_text(v.row())}});
       return false;
     }},
    {"linear", "linear/endo-agreement",
     "a matrix acting as a tensor map agrees with the homomorphism action",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const NcMatrix f = random_matrix(rng, n, n);
       const CoordRow v = random_coord_row(rng, n);
       const Basis ref = Basis::reference(n);
       if (apply_linear_tensor(TensorPolyMap::from_endo(f), v) ==
           apply_hom(HomMatrix(f, ref, ref), v))
         return true;
       cx = describe({{"f", to_text(f)}, {"v", to_text(v.row())}});
       return false;
     }},
    {"linear", "linear/d-linearity",
     "tensor maps are additive and commute with central scalars",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const TensorPolyMap a = random_tensor_map(rng, 1, n, cfg.max_terms);
       const CoordRow u = random_coord_row(rng, n);
       const CoordRow v = random_coord_row(rng, n);
       const Quaternion c = random_central(rng);
       const bool additive = apply_linear_tensor(a, u + v) ==
                             apply_linear_tensor(a, u) +
                                 apply_linear_tensor(a, v);
       const bool central = apply_linear_tensor(a, scalar_left_mul(c, v)) ==
                            scalar_left_mul(c, apply_linear_tensor(a, v));
       if (additive && central) return true;
       cx = describe({{"map", to_text(a)},
                      {"u", to_text(u.row())},
                      {"v", to_text(v.row())},
                      {"c", to_text(c)}});
       return false;
     }},
    {"linear", "linear/transform-identity",
     "transforming by the identity leaves the map extensionally unchanged",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, std::min<std::size_t>(cfg.dim, 4));
       const TensorPolyMap a = random_tensor_map(rng, 1, n, cfg.max_terms);
       const PassiveTransform id(NcMatrix::identity(n));
       if (maps_equal(transform_linear_tensor(a, id), a)) return true;
       cx = describe({{"map", to_text(a)}});
       return false;
     }},
    {"linear", "linear/covariance",
     "the image of a linear map, expanded in the reference frame, does not "
     "depend on the basis",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, std::min<std::size_t>(cfg.dim, 4));
       const TensorPolyMap a = random_tensor_map(rng, 1, n, cfg.max_terms);
       const PassiveTransform g = random_passive(rng, n);
       const CoordRow v2 = random_coord_row(rng, n);
       if (covariance_check_linear(a, g, v2)) return true;
       cx = describe({{"map", to_text(a)},
                      {"g", to_text(g.matrix())},
                      {"v2", to_text(v2.row())}});
       return false;
     }},
    {"linear", "linear/transform-composition",
     "transforming by g1 then g2 equals transforming by g2*g1",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, std::min<std::size_t>(cfg.dim, 3));
       const TensorPolyMap a = random_tensor_map(rng, 1, n, cfg.max_terms);
       const PassiveTransform g1 = random_passive(rng, n);
       const PassiveTransform g2 = random_passive(rng, n);
       const TensorPolyMap two_steps =
           transform_linear_tensor(transform_linear_tensor(a, g1), g2);
       const TensorPolyMap one_step =
           transform_linear_tensor(a, compose_passive(g2, g1));
       if (maps_equal(two_steps, one_step)) return true;
       cx = describe({{"map", to_text(a)},
                      {"g1", to_text(g1.matrix())},
                      {"g2", to_text(g2.matrix())}});
       return false;
     },
     4},
    {"linear", "linear/commutative-degeneration",
     "with central scalars the tensor transformation law collapses to the "
     "endomorphism law f2 = g*f1*inverse(g)",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, std::min<std::size_t>(cfg.dim, 4));
       const NcMatrix f = random_central_matrix(rng, n, n);
       const PassiveTransform g(random_central_rc_nonsingular(rng, n));
       const Basis ref = Basis::reference(n);
       const HomMatrix f2 = endo_transform(HomMatrix(f, ref, ref), g);
       const TensorPolyMap lhs =
           transform_linear_tensor(TensorPolyMap::from_endo(f), g);
       const TensorPolyMap rhs = TensorPolyMap::from_endo(matrix_of_hom(f2));
       if (maps_equal(lhs, rhs)) return true;
       cx = describe({{"f", to_text(f)}, {"g", to_text(g.matrix())}});
       return false;
     }},
};

// ---- polylinear ------------------------------------------------------

std::size_t poly_grid_cap(const SuiteConfig& cfg) {
  return std::min<std::size_t>(cfg.dim, cfg.arity >= 3 ? 2 : 3);
}

const Property kPolyProps[] = {
    {"polylinear", "polylinear/arity1-specialization",
     "arity-1 polylinear operations specialize to the linear ones "
     "term-for-term",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, std::min<std::size_t>(cfg.dim, 4));
       const TensorPolyMap a = random_tensor_map(rng, 1, n, cfg.max_terms);
       const CoordRow v = random_coord_row(rng, n);
       const PassiveTransform g = random_passive(rng, n);
       const bool apply_agrees =
           apply_polylinear(a, {v}) == apply_linear_tensor(a, v);
       const bool transform_agrees = same_term_lists(
           transform_polylinear(a, g), transform_linear_tensor(a, g));
       if (apply_agrees && transform_agrees) return true;
       cx = describe({{"map", to_text(a)},
                      {"v", to_text(v.row())},
                      {"g", to_text(g.matrix())}});
       return false;
     }},
    {"polylinear", "polylinear/slot-additivity", "each input slot is additive",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const TensorPolyMap a =
           random_tensor_map(rng, cfg.arity, n, cfg.max_terms);
       std::vector<CoordRow> vs;
       for (std::size_t t = 0; t < cfg.arity; ++t)
         vs.push_back(random_coord_row(rng, n));
       const std::size_t slot = rng.below(cfg.arity);
       const CoordRow u = random_coord_row(rng, n);
       std::vector<CoordRow> vs_sum = vs;
       vs_sum[slot] = vs[slot] + u;
       std::vector<CoordRow> vs_u = vs;
       vs_u[slot] = u;
       if (apply_polylinear(a, vs_sum) ==
           apply_polylinear(a, vs) + apply_polylinear(a, vs_u))
         return true;
       cx = describe({{"map", to_text(a)},
                      {"slot", std::to_string(slot)},
                      {"u", to_text(u.row())}});
       return false;
     }},
    {"polylinear", "polylinear/slot-central-homogeneity",
     "each input slot commutes with central scalars",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const TensorPolyMap a =
           random_tensor_map(rng, cfg.arity, n, cfg.max_terms);
       std::vector<CoordRow> vs;
       for (std::size_t t = 0; t < cfg.arity; ++t)
         vs.push_back(random_coord_row(rng, n));
       const std::size_t slot = rng.below(cfg.arity);
       const Quaternion c = random_central(rng);
       std::vector<CoordRow> vs_scaled = vs;
       vs_scaled[slot] = scalar_left_mul(c, vs[slot]);
       if (apply_polylinear(a, vs_scaled) ==
           scalar_left_mul(c, apply_polylinear(a, vs)))
         return true;
       cx = describe({{"map", to_text(a)},
                      {"slot", std::to_string(slot)},
                      {"c", to_text(c)}});
       return false;
     }},
    {"polylinear", "polylinear/transform-identity-action",
     "transforming by the identity preserves the map's action",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, poly_grid_cap(cfg));
       const TensorPolyMap a =
           random_tensor_map(rng, cfg.arity, n, cfg.max_terms);
       const PassiveTransform id(NcMatrix::identity(n));
       const TensorPolyMap a_id = transform_polylinear(a, id);
       std::vector<CoordRow> vs;
       for (std::size_t t = 0; t < cfg.arity; ++t)
         vs.push_back(random_coord_row(rng, n));
       if (apply_polylinear(a_id, vs) == apply_polylinear(a, vs)) return true;
       cx = describe({{"map", to_text(a)}});
       return false;
     },
     2},
    {"polylinear", "polylinear/covariance",
     "the image of a polylinear map, expanded in the reference frame, does "
     "not depend on the basis",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, std::min<std::size_t>(cfg.dim, 3));
       const TensorPolyMap a =
           random_tensor_map(rng, cfg.arity, n, cfg.max_terms);
       const PassiveTransform g = random_passive(rng, n);
       std::vector<CoordRow> vs2;
       for (std::size_t t = 0; t < cfg.arity; ++t)
         vs2.push_back(random_coord_row(rng, n));
       if (covariance_check_polylinear(a, g, vs2)) return true;
       cx = describe({{"map", to_text(a)}, {"g", to_text(g.matrix())}});
       return false;
     },
     4},
    {"polylinear", "polylinear/maps-equal-padding",
     "appending zero terms or splitting a term does not change the map",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, poly_grid_cap(cfg));
       const TensorPolyMap a =
           random_tensor_map(rng, cfg.arity, n, cfg.max_terms);
       TensorPolyMap b = copy_map(a);
       // Zero term anywhere is neutral.
       std::vector<std::size_t> js(cfg.arity, 0);
       for (auto& j : js) j = rng.below(n);
       TensorPolyMap::Term zero_term(cfg.arity + 1);
       for (auto& f : zero_term) f = random_quaternion(rng);
       zero_term[rng.below(cfg.arity + 1)] = Quaternion();
       b.add_term(rng.below(n), js, zero_term);
       // Splitting the last factor of a term is neutral: rebuild with one
       // term emitted as two halves.
       TensorPolyMap c(cfg.arity, n);
       bool split_done = false;
       for (std::size_t i = 0; i < n; ++i) {
         std::vector<std::size_t> t(cfg.arity, 0);
         do {
           for (const auto& term : a.terms_at(i, t)) {
             if (!split_done) {
               const Quaternion part = random_quaternion(rng);
               TensorPolyMap::Term first = term;
               TensorPolyMap::Term second = term;
               first.back() = term.back() - part;
               second.back() = part;
               c.add_term(i, t, first);
               c.add_term(i, t, second);
               split_done = true;
             } else {
               c.add_term(i, t, term);
             }
           }
         } while (next_tuple(t, n));
       }
       const bool padding_ok = maps_equal(a, b);
       const bool split_ok = !split_done || maps_equal(a, c);
       if (padding_ok && split_ok) return true;
       cx = describe({{"map", to_text(a)}});
       return false;
     },
     4},
    {"polylinear", "polylinear/maps-equal-separates",
     "adding a nonzero term changes the map",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, poly_grid_cap(cfg));
       const TensorPolyMap a =
           random_tensor_map(rng, cfg.arity, n, cfg.max_terms);
       TensorPolyMap b = copy_map(a);
       std::vector<std::size_t> js(cfg.arity, 0);
       for (auto& j : js) j = rng.below(n);
       b.add_term(rng.below(n), js,
                  TensorPolyMap::Term(cfg.arity + 1, Quaternion(1)));
       if (!maps_equal(a, b)) return true;
       cx = describe({{"map", to_text(a)}});
       return false;
     }},
};

// ---- skew ------------------------------------------------------------

const Property kSkewProps[] = {
    {"skew", "skew/antisymmetry-swap",
     "swapping the arguments negates the antisymmetrized image",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const TensorPolyMap h = random_tensor_map(rng, 2, n, cfg.max_terms);
       const CoordRow u = random_coord_row(rng, n);
       const CoordRow v = random_coord_row(rng, n);
       if (skew_apply(h, u, v) == -skew_apply(h, v, u)) return true;
       cx = describe({{"map", to_text(h)},
                      {"u", to_text(u.row())},
                      {"v", to_text(v.row())}});
       return false;
     }},
    {"skew", "skew/antisymmetry-diagonal",
     "the antisymmetrized image of equal arguments is zero",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const TensorPolyMap h = random_tensor_map(rng, 2, n, cfg.max_terms);
       const CoordRow u = random_coord_row(rng, n);
       if (skew_apply(h, u, u).is_zero()) return true;
       cx = describe({{"map", to_text(h)}, {"u", to_text(u.row())}});
       return false;
     }},
    {"skew", "skew/detstar-agreement",
     "the detstar contraction route computes the same antisymmetrized image",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const TensorPolyMap h = random_tensor_map(rng, 2, n, cfg.max_terms);
       const CoordRow u = random_coord_row(rng, n);
       const CoordRow v = random_coord_row(rng, n);
       if (skew_apply(h, u, v) == skew_apply_det(h, u, v)) return true;
       cx = describe({{"map", to_text(h)},
                      {"u", to_text(u.row())},
                      {"v", to_text(v.row())}});
       return false;
     }},
    {"skew", "skew/covariance-sample",
     "the antisymmetrized image, expanded in the reference frame, does not "
     "depend on the basis",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, std::min<std::size_t>(cfg.dim, 3));
       const TensorPolyMap h1 = random_tensor_map(rng, 2, n, cfg.max_terms);
       const PassiveTransform g = random_passive(rng, n);
       const CoordRow u2 = random_coord_row(rng, n);
       const CoordRow v2 = random_coord_row(rng, n);
       const TensorPolyMap h2 = transform_polylinear(h1, g);
       const Basis e2(g.matrix());
       const CoordRow lhs = expand_in_reference(skew_apply(h2, u2, v2), e2);
       const CoordRow rhs = skew_apply(h1, passive_coords_forward(g, u2),
                                       passive_coords_forward(g, v2));
       if (lhs == rhs) return true;
       cx = describe({{"map", to_text(h1)},
                      {"g", to_text(g.matrix())},
                      {"u2", to_text(u2.row())},
                      {"v2", to_text(v2.row())}});
       return false;
     },
     4},
    {"skew", "skew/transform-check",
     "skew covariance holds on the whole scaled-unit grid",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, std::min<std::size_t>(cfg.dim, 2));
       const TensorPolyMap h1 = random_tensor_map(rng, 2, n, cfg.max_terms);
       const PassiveTransform g = random_passive(rng, n);
       if (skew_transform_check(h1, g)) return true;
       cx = describe({{"map", to_text(h1)}, {"g", to_text(g.matrix())}});
       return false;
     },
     8},
};

// ---- geo -------------------------------------------------------------

const Property kGeoProps[] = {
    {"geo", "geo/trivial-rep-constant",
     "coordinates under the trivial representation never change",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const GeometricObject obj(trivial_rep(n), random_coord_row(rng, n),
                                 random_basis(rng, n));
       const PassiveTransform g = random_passive(rng, n);
       if (geo_transform(obj, g).coords() == obj.coords()) return true;
       cx = describe(
           {{"w", to_text(obj.coords().row())}, {"g", to_text(g.matrix())}});
       return false;
     }},
    {"geo", "geo/tautological-covariance",
     "the reference expansion of tautological coordinates is invariant",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const GeometricObject obj(tautological_rep(n), random_coord_row(rng, n),
                                 random_basis(rng, n));
       const PassiveTransform g = random_passive(rng, n);
       const GeometricObject moved = geo_transform(obj, g);
       if (expand_in_reference(moved.coords(), moved.v_basis()) ==
           expand_in_reference(obj.coords(), obj.v_basis()))
         return true;
       cx = describe({{"w", to_text(obj.coords().row())},
                      {"e", to_text(obj.v_basis().matrix())},
                      {"g", to_text(g.matrix())}});
       return false;
     }},
    {"geo", "geo/rep-action-law-trivial",
     "acting by g then h equals acting by the composite h*g",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const NcMatrix g = random_rc_nonsingular(rng, n);
       const NcMatrix h = random_rc_nonsingular(rng, n);
       const CoordRow w = random_coord_row(rng, n);
       if (rep_action_law_check(trivial_rep(n), g, h, w)) return true;
       cx = describe(
           {{"g", to_text(g)}, {"h", to_text(h)}, {"w", to_text(w.row())}});
       return false;
     }},
    {"geo", "geo/rep-action-law-tautological",
     "acting by g then h equals acting by the composite h*g",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const NcMatrix g = random_rc_nonsingular(rng, n);
       const NcMatrix h = random_rc_nonsingular(rng, n);
       const CoordRow w = random_coord_row(rng, n);
       if (rep_action_law_check(tautological_rep(n), g, h, w)) return true;
       cx = describe(
           {{"g", to_text(g)}, {"h", to_text(h)}, {"w", to_text(w.row())}});
       return false;
     }},
    {"geo", "geo/broken-rep-detected",
     "a non-homomorphic representation violates the action law on some sample",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       for (int attempt = 0; attempt < 32; ++attempt) {
         const NcMatrix g = random_rc_nonsingular(rng, n);
         const NcMatrix h = random_rc_nonsingular(rng, n);
         const CoordRow w = random_coord_row(rng, n);
         if (!rep_action_law_check(broken_rep(n), g, h, w)) return true;
       }
       cx = describe({{"dim", std::to_string(n)},
                      {"note", "no violation in 32 attempts"}});
       return false;
     }},
    {"geo", "geo/orbit-membership",
     "transforms land on the same orbit; perturbed coordinates do not",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const GroupRep rep = tautological_rep(n);
       const Basis e1 = random_basis(rng, n);
       const CoordRow w1 = random_coord_row(rng, n);
       const PassiveTransform g = random_passive(rng, n);
       const GeometricObject moved =
           geo_transform(GeometricObject(rep, w1, e1), g);
       const bool member = on_same_orbit(rep, e1, w1, moved.v_basis(),
                                         moved.coords());
       const CoordRow off = moved.coords() + CoordRow::unit(n, 0);
       const bool non_member =
           !on_same_orbit(rep, e1, w1, moved.v_basis(), off);
       if (member && non_member) return true;
       cx = describe({{"e1", to_text(e1.matrix())},
                      {"w1", to_text(w1.row())},
                      {"g", to_text(g.matrix())}});
       return false;
     }},
    {"geo", "geo/endo-covariance",
     "the image of an endomorphism, expanded in the reference frame, does "
     "not depend on the basis",
     [](const SuiteConfig& cfg, const SuiteHooks&, SplitMix64& rng,
        std::string& cx) {
       const std::size_t n = draw_dim(rng, cfg.dim);
       const Basis e1 = random_basis(rng, n);
       const HomMatrix f1(random_matrix(rng, n, n), e1, e1);
       const PassiveTransform g = random_passive(rng, n);
       const HomMatrix f2 = endo_transform(f1, g);
       const CoordRow v2 = random_coord_row(rng, n);
       const CoordRow v1 = passive_coords_forward(g, v2);
       const CoordRow lhs =
           expand_in_reference(apply_hom(f2, v2), f2.basis_out());
       const CoordRow rhs = expand_in_reference(apply_hom(f1, v1), e1);
       if (lhs == rhs) return true;
       cx = describe({{"f1", to_text(f1.f())},
                      {"e1", to_text(e1.matrix())},
                      {"g", to_text(g.matrix())},
                      {"v2", to_text(v2.row())}});
       return false;
     }},
};

std::vector<const Property*> properties_for(Suite suite) {
  std::vector<const Property*> out;
  const auto add = [&out](const Property* begin, const Property* end) {
    for (const Property* p = begin; p != end; ++p) out.push_back(p);
  };
  const bool all = suite == Suite::all;
  if (all || suite == Suite::matrix)
    add(std::begin(kMatrixProps), std::end(kMatrixProps));
  if (all || suite == Suite::vspace)
    add(std::begin(kVspaceProps), std::end(kVspaceProps));
  if (all || suite == Suite::transform)
    add(std::begin(kTransformProps), std::end(kTransformProps));
  if (all || suite == Suite::linear)
    add(std::begin(kLinearProps), std::end(kLinearProps));
  if (all || suite == Suite::polylinear)
    add(std::begin(kPolyProps), std::end(kPolyProps));
  if (all || suite == Suite::skew)
    add(std::begin(kSkewProps), std::end(kSkewProps));
  if (all || suite == Suite::geo)
    add(std::begin(kGeoProps), std::end(kGeoProps));
  return out;
}

}  // namespace

Suite suite_from_string(const std::string& s) {
  if (s == "matrix") return Suite::matrix;
  if (s == "vspace") return Suite::vspace;
  if (s == "transform") return Suite::transform;
  if (s == "linear") return Suite::linear;
  if (s == "polylinear") return Suite::polylinear;
  if (s == "skew") return Suite::skew;
  if (s == "geo") return Suite::geo;
  if (s == "all") return Suite::all;
  throw ConfigError("unknown suite: " + s);
}

std::string suite_to_string(Suite s) {
  switch (s) {
    case Suite::matrix: return "matrix";
    case Suite::vspace: return "vspace";
    case Suite::transform: return "transform";
    case Suite::linear: return "linear";
    case Suite::polylinear: return "polylinear";
    case Suite::skew: return "skew";
    case Suite::geo: return "geo";
    case Suite::all: return "all";
  }
  throw ConfigError("unknown suite value");
}

ReportFormat format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "text") return ReportFormat::text;
  throw ConfigError("unknown format: " + s);
}

std::string format_to_string(ReportFormat f) {
  return f == ReportFormat::json ? "json" : "text";
}

void validate(const SuiteConfig& cfg) {
  if (cfg.dim < 1 || cfg.dim > 8) {
    throw ConfigError("dim must be in 1..8, got " + std::to_string(cfg.dim));
  }
  if (cfg.trials < 1) {
    throw ConfigError("trials must be positive");
  }
  if (cfg.arity < 1 || cfg.arity > 3) {
    throw ConfigError("arity must be in 1..3, got " +
                      std::to_string(cfg.arity));
  }
  if (cfg.max_terms < 1) {
    throw ConfigError("max_terms must be positive");
  }
}

bool SuiteReport::all_passed() const { return total_failures() == 0; }

std::size_t SuiteReport::total_failures() const {
  std::size_t n = 0;
  for (const auto& p : properties) n += p.failures;
  return n;
}

SuiteReport run_suite(const SuiteConfig& cfg, const SuiteHooks& hooks) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = suite_to_string(cfg.suite);
  report.config = cfg;
  for (const Property* prop : properties_for(cfg.suite)) {
    PropertyResult result;
    result.name = prop->name;
    result.law = prop->law;
    result.trials =
        std::max<std::size_t>(1, cfg.trials / prop->trial_divisor);
    const auto prop_start = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < result.trials; ++t) {
      SplitMix64 rng(derive_seed(cfg.seed, prop->suite, prop->name, t));
      std::string cx;
      if (prop->run(cfg, hooks, rng, cx)) {
        ++result.passes;
      } else {
        ++result.failures;
        if (result.counterexample.empty()) {
          result.counterexample = "trial " + std::to_string(t) + ": " + cx;
        }
      }
    }
    const auto prop_end = std::chrono::steady_clock::now();
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            prop_end - prop_start)
                            .count();
    report.properties.push_back(std::move(result));
  }
  const auto end = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
          .count();
  return report;
}

namespace {

json config_to_json(const SuiteConfig& cfg) {
  json c;
  c["suite"] = suite_to_string(cfg.suite);
  c["dim"] = cfg.dim;
  c["trials"] = cfg.trials;
  c["arity"] = cfg.arity;
  c["max_terms"] = cfg.max_terms;
  c["seed"] = cfg.seed;
  c["format"] = format_to_string(cfg.format);
  return c;
}

}  // namespace

std::string render_json(const SuiteReport& report, bool include_timing) {
  json j;
  j["suite"] = report.suite;
  j["config"] = config_to_json(report.config);
  j["properties"] = json::array();
  for (const auto& p : report.properties) {
    json jp;
    jp["name"] = p.name;
    jp["law"] = p.law;
    jp["trials"] = p.trials;
    jp["passes"] = p.passes;
    jp["failures"] = p.failures;
    if (p.failures > 0) {
      jp["counterexample"] = p.counterexample;
    }
    if (include_timing) {
      jp["elapsed_ms"] = p.elapsed_ms;
    }
    j["properties"].push_back(std::move(jp));
  }
  if (include_timing) {
    j["elapsed_ms"] = report.elapsed_ms;
  }
  return j.dump(2) + "\n";
}

std::string render_text(const SuiteReport& report, bool include_timing) {
  std::string out = "suite: " + report.suite + "\n";
  const SuiteConfig& c = report.config;
  out += "config: dim=" + std::to_string(c.dim) +
         " trials=" + std::to_string(c.trials) +
         " arity=" + std::to_string(c.arity) +
         " max_terms=" + std::to_string(c.max_terms) +
         " seed=" + std::to_string(c.seed) + "\n";
  std::size_t failures = 0;
  for (const auto& p : report.properties) {
    failures += p.failures;
    std::string line = p.failures == 0 ? "  PASS  " : "  FAIL  ";
    line += p.name;
    if (line.size() < 48) line.resize(48, ' ');
    line += " " + std::to_string(p.passes) + "/" + std::to_string(p.trials);
    if (include_timing) line += " (" + std::to_string(p.elapsed_ms) + " ms)";
    out += line + "\n";
    if (p.failures > 0) {
      out += "        law: " + p.law + "\n";
      out += "        counterexample: " + p.counterexample + "\n";
    }
  }
  out += std::string("result: ") + (failures == 0 ? "PASS" : "FAIL") + " (" +
         std::to_string(report.properties.size()) + " properties, " +
         std::to_string(failures) + " failures)\n";
  if (include_timing) {
    out += "elapsed_ms: " + std::to_string(report.elapsed_ms) + "\n";
  }
  return out;
}

}  // namespace nccov
