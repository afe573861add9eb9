#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nccov/vspace.hpp"
#include "oracle.hpp"

using namespace nccov;

namespace {
const Quaternion q1 = Quaternion::one();
const Quaternion qi = Quaternion::i();
const Quaternion qj = Quaternion::j();
const Quaternion qk = Quaternion::k();
const Quaternion q0 = Quaternion::zero();

CoordRow row2(const Quaternion& a, const Quaternion& b) {
  return CoordRow(NcMatrix{{a, b}});
}
}  // namespace

TEST_CASE("coord row basics") {
  CoordRow v(3);
  CHECK(v.dim() == 3);
  CHECK(v.is_zero());
  v[1] = qi;
  CHECK(v[1] == qi);
  CHECK_FALSE(v.is_zero());
  CHECK_THROWS_AS(v[3], ShapeMismatch);
  CHECK_THROWS_AS(CoordRow(NcMatrix(2, 2)), ShapeMismatch);

  const CoordRow u = CoordRow::unit(3, 1);
  CHECK(u[0] == q0);
  CHECK(u[1] == q1);
  CHECK(u[2] == q0);

  CHECK(row2(q1, qi) + row2(qj, qk) == row2(q1 + qj, qi + qk));
  CHECK(row2(q1, qi) - row2(q1, qi) == CoordRow(2));
  CHECK(-row2(q1, qi) == row2(-q1, -qi));
  CHECK(scalar_left_mul(qi, row2(qj, q1)) == row2(qk, qi));
}

TEST_CASE("basis construction is validated") {
  CHECK_THROWS_AS(Basis(NcMatrix(2, 3)), ShapeMismatch);
  CHECK_THROWS_AS(Basis(NcMatrix::zero(2, 2)), Singular);
  CHECK_THROWS_AS(Basis(NcMatrix{{q1, qi}, {qj, -qk}}), Singular);
  CHECK(Basis::reference(3).matrix() == NcMatrix::identity(3));
  CHECK(Basis(NcMatrix{{qi}}).dim() == 1);
}

TEST_CASE("expand and coords on a worked instance") {
  const Basis e(NcMatrix{{qi, q0}, {q0, q1}});
  const CoordRow v = row2(q1, qk);
  const CoordRow ref = expand_in_reference(v, e);
  CHECK(ref == row2(qi, qk));
  CHECK(coords_in_basis(ref, e) == v);
}

TEST_CASE("expand and coords are mutually inverse on random instances") {
  oracle::OracleRng rng(31);
  int done = 0;
  while (done < 40) {
    const std::size_t n = 1 + rng.range(0, 2);
    const NcMatrix em = oracle::to_lib(oracle::random_omat(rng, n, n));
    if (!is_rc_nonsingular(em)) continue;
    ++done;
    const Basis e(em);
    CoordRow v(n);
    for (std::size_t p = 0; p < n; ++p)
      v[p] = oracle::to_lib(oracle::random_oquat(rng));
    CHECK(coords_in_basis(expand_in_reference(v, e), e) == v);
    CHECK(expand_in_reference(coords_in_basis(v, e), e) == v);
  }
}

TEST_CASE("apply_hom contracts coordinates against matrix rows") {
  // w[k] = sum_p v[p] * f(p, k) by hand:
  // w[0] = 1*j + i*1 = j + i, w[1] = 1*0 + i*k = -j.
  const Basis ref = Basis::reference(2);
  const HomMatrix h(NcMatrix{{qj, q0}, {q1, qk}}, ref, ref);
  CHECK(apply_hom(h, row2(q1, qi)) == row2(qi + qj, -qj));
}

TEST_CASE("hom matrix round trip and unit-row recovery") {
  oracle::OracleRng rng(47);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n_in = 1 + rng.range(0, 2);
    const std::size_t n_out = 1 + rng.range(0, 2);
    const NcMatrix f = oracle::to_lib(oracle::random_omat(rng, n_in, n_out));
    const HomMatrix h =
        hom_from_matrix(f, Basis::reference(n_in), Basis::reference(n_out));
    CHECK(matrix_of_hom(h) == f);
    for (std::size_t p = 0; p < n_in; ++p) {
      const CoordRow image = apply_hom(h, CoordRow::unit(n_in, p));
      for (std::size_t k = 0; k < n_out; ++k) CHECK(image[k] == f(p, k));
    }
  }
}

TEST_CASE("hom shape contracts") {
  const Basis e2 = Basis::reference(2);
  const Basis e3 = Basis::reference(3);
  CHECK_THROWS_AS(HomMatrix(NcMatrix(3, 2), e2, e2), ShapeMismatch);
  CHECK_THROWS_AS(HomMatrix(NcMatrix(2, 2), e2, e3), ShapeMismatch);
  const HomMatrix h(NcMatrix(2, 3), e2, e3);
  CHECK(h.n_in() == 2);
  CHECK(h.n_out() == 3);
  CHECK_THROWS_AS(apply_hom(h, CoordRow(3)), ShapeMismatch);
}

TEST_CASE("composition is sequential application") {
  const Basis ref1 = Basis::reference(1);
  const HomMatrix h1(NcMatrix{{qi}}, ref1, ref1);
  const HomMatrix h2(NcMatrix{{qj}}, ref1, ref1);
  const HomMatrix both = compose_homs(h1, h2);
  CHECK(matrix_of_hom(both) == NcMatrix{{qk}});  // i*j = k
  CoordRow v(1);
  v[0] = q1;
  CHECK(apply_hom(both, v) == apply_hom(h2, apply_hom(h1, v)));

  oracle::OracleRng rng(61);
  for (int t = 0; t < 20; ++t) {
    const std::size_t a = 1 + rng.range(0, 2);
    const std::size_t b = 1 + rng.range(0, 2);
    const std::size_t c = 1 + rng.range(0, 2);
    const HomMatrix f(oracle::to_lib(oracle::random_omat(rng, a, b)),
                      Basis::reference(a), Basis::reference(b));
    const HomMatrix g(oracle::to_lib(oracle::random_omat(rng, b, c)),
                      Basis::reference(b), Basis::reference(c));
    CoordRow v2(a);
    for (std::size_t p = 0; p < a; ++p)
      v2[p] = oracle::to_lib(oracle::random_oquat(rng));
    CHECK(apply_hom(compose_homs(f, g), v2) ==
          apply_hom(g, apply_hom(f, v2)));
    CHECK(matrix_of_hom(compose_homs(f, g)) ==
          rc_product(matrix_of_hom(f), matrix_of_hom(g)));
  }
}

TEST_CASE("composition rejects mismatched middle bases") {
  const Basis ref = Basis::reference(1);
  const Basis other(NcMatrix{{qi}});
  const HomMatrix h1(NcMatrix{{q1}}, ref, ref);
  const HomMatrix h2(NcMatrix{{q1}}, other, ref);
  CHECK_THROWS_AS(compose_homs(h1, h2), BasisMismatch);
}

TEST_CASE("inverse hom") {
  const Basis ref = Basis::reference(2);
  const HomMatrix h(NcMatrix{{qi, q0}, {q0, qj}}, ref, ref);
  const HomMatrix hinv = inverse_hom(h);
  CHECK(matrix_of_hom(compose_homs(h, hinv)) == NcMatrix::identity(2));
  CHECK(matrix_of_hom(compose_homs(hinv, h)) == NcMatrix::identity(2));
  CHECK_THROWS_AS(inverse_hom(HomMatrix(NcMatrix(2, 3), ref,
                                        Basis::reference(3))),
                  ShapeMismatch);
}

TEST_CASE("homomorphism is additive and left homogeneous") {
  oracle::OracleRng rng(83);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng.range(0, 2);
    const std::size_t m = 1 + rng.range(0, 2);
    const HomMatrix h(oracle::to_lib(oracle::random_omat(rng, n, m)),
                      Basis::reference(n), Basis::reference(m));
    CoordRow u(n), v(n);
    for (std::size_t p = 0; p < n; ++p) {
      u[p] = oracle::to_lib(oracle::random_oquat(rng));
      v[p] = oracle::to_lib(oracle::random_oquat(rng));
    }
    const Quaternion a = oracle::to_lib(oracle::random_oquat(rng));
    CHECK(apply_hom(h, u + v) == apply_hom(h, u) + apply_hom(h, v));
    CHECK(apply_hom(h, scalar_left_mul(a, v)) ==
          scalar_left_mul(a, apply_hom(h, v)));
  }
}
