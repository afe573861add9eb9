#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nccov/geometry.hpp"

namespace nccov {

/// splitmix64. Chosen over the standard-library engines because its output
/// is a fixed published sequence, so reports stay byte-identical across
/// platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-enough draw in [0, bound); bound must be positive. The modulo
  /// bias is irrelevant at the bounds used here (all far below 2^32).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// FNV-1a over a byte string, for folding names into seeds.
std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xCBF29CE484222325ull);

/// Seed for one trial of one property: a stable hash of the run seed, the
/// suite name, the property name, and the trial index, so every trial is
/// reproducible in isolation.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view suite,
                          std::string_view property, std::uint64_t trial);

// Instance generators. Coefficients are small on purpose: numerators in
// [-4, 4], denominators 1 or 2 keep exact arithmetic fast and failures
// readable.

Rational random_coeff(SplitMix64& rng);
Quaternion random_quaternion(SplitMix64& rng);
/// Element of the rational center.
Quaternion random_central(SplitMix64& rng);
Quaternion random_nonzero_quaternion(SplitMix64& rng);

NcMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols);
NcMatrix random_central_matrix(SplitMix64& rng, std::size_t rows,
                               std::size_t cols);

/// Rejection sampling; retries until the draw has an rc-inverse.
NcMatrix random_rc_nonsingular(SplitMix64& rng, std::size_t n);
NcMatrix random_central_rc_nonsingular(SplitMix64& rng, std::size_t n);

Basis random_basis(SplitMix64& rng, std::size_t n);
CoordRow random_coord_row(SplitMix64& rng, std::size_t n);
PassiveTransform random_passive(SplitMix64& rng, std::size_t n);
ActiveTransform random_active(SplitMix64& rng, std::size_t n);

/// Random tensor map: every slot gets 0..max_terms terms.
TensorPolyMap random_tensor_map(SplitMix64& rng, std::size_t arity,
                                std::size_t dim, std::size_t max_terms);

}  // namespace nccov
