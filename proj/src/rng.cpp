#include "nccov/rng.hpp"

#include <algorithm>

namespace nccov {

std::uint64_t fnv1a64(std::string_view s, std::uint64_t h) {
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

namespace {

std::uint64_t fnv1a64_u64(std::uint64_t v,
                          std::uint64_t h = 0xCBF29CE484222325ull) {
  for (int byte = 0; byte < 8; ++byte) {
    h ^= (v >> (8 * byte)) & 0xFF;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view suite,
                          std::string_view property, std::uint64_t trial) {
  std::uint64_t h = fnv1a64_u64(seed);
  h = fnv1a64(suite, h);
  h = fnv1a64(property, h);
  h = fnv1a64_u64(trial, h);
  return h;
}

Rational random_coeff(SplitMix64& rng) {
  const long num = static_cast<long>(rng.below(9)) - 4;
  const long den = rng.below(2) == 0 ? 1 : 2;
  return Rational(num, den);
}

Quaternion random_quaternion(SplitMix64& rng) {
  const Rational w = random_coeff(rng);
  const Rational x = random_coeff(rng);
  const Rational y = random_coeff(rng);
  const Rational z = random_coeff(rng);
  return Quaternion(w, x, y, z);
}

Quaternion random_central(SplitMix64& rng) {
  return Quaternion(random_coeff(rng));
}

Quaternion random_nonzero_quaternion(SplitMix64& rng) {
  for (;;) {
    Quaternion q = random_quaternion(rng);
    if (!q.is_zero()) return q;
  }
}

NcMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  NcMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = random_quaternion(rng);
    }
  }
  return m;
}

NcMatrix random_central_matrix(SplitMix64& rng, std::size_t rows,
                               std::size_t cols) {
  NcMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = random_central(rng);
    }
  }
  return m;
}

NcMatrix random_rc_nonsingular(SplitMix64& rng, std::size_t n) {
  for (;;) {
    NcMatrix m = random_matrix(rng, n, n);
    if (is_rc_nonsingular(m)) return m;
  }
}

NcMatrix random_central_rc_nonsingular(SplitMix64& rng, std::size_t n) {
  for (;;) {
    NcMatrix m = random_central_matrix(rng, n, n);
    if (is_rc_nonsingular(m)) return m;
  }
}

Basis random_basis(SplitMix64& rng, std::size_t n) {
  return Basis(random_rc_nonsingular(rng, n));
}

CoordRow random_coord_row(SplitMix64& rng, std::size_t n) {
  CoordRow v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = random_quaternion(rng);
  return v;
}

PassiveTransform random_passive(SplitMix64& rng, std::size_t n) {
  return PassiveTransform(random_rc_nonsingular(rng, n));
}

ActiveTransform random_active(SplitMix64& rng, std::size_t n) {
  return ActiveTransform(random_rc_nonsingular(rng, n));
}

TensorPolyMap random_tensor_map(SplitMix64& rng, std::size_t arity,
                                std::size_t dim, std::size_t max_terms) {
  TensorPolyMap a(arity, dim);
  std::vector<std::size_t> js(arity, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    std::fill(js.begin(), js.end(), 0);
    bool more = true;
    while (more) {
      const std::size_t count = rng.below(max_terms + 1);
      for (std::size_t s = 0; s < count; ++s) {
        TensorPolyMap::Term t(arity + 1);
        for (auto& factor : t) factor = random_quaternion(rng);
        a.add_term(i, js, std::move(t));
      }
      more = false;
      for (std::size_t pos = js.size(); pos-- > 0;) {
        if (++js[pos] < dim) {
          more = true;
          break;
        }
        js[pos] = 0;
      }
    }
  }
  return a;
}

}  // namespace nccov
