#pragma once

// Reference implementations used only by the tests. Everything here
// computes with its own arithmetic (machine-word rationals, a structure
// constant table) so library results are checked against a second
// derivation, never against themselves. Coefficients in every generated
// instance are small enough that the long long intermediates stay far
// from overflow.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "nccov/text.hpp"

namespace oracle {

struct ORat {
  long long num = 0;
  long long den = 1;

  ORat() = default;
  ORat(long long n) : num(n) {}
  ORat(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::runtime_error("oracle rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend ORat operator+(const ORat& a, const ORat& b) {
    return ORat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend ORat operator-(const ORat& a, const ORat& b) {
    return ORat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend ORat operator*(const ORat& a, const ORat& b) {
    return ORat(a.num * b.num, a.den * b.den);
  }
  friend bool operator==(const ORat& a, const ORat& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Coefficients of 1, i, j, k.
struct OQuat {
  std::array<ORat, 4> c{};

  OQuat() = default;
  OQuat(ORat w, ORat x, ORat y, ORat z) : c{w, x, y, z} {}

  friend OQuat operator+(const OQuat& a, const OQuat& b) {
    OQuat r;
    for (int p = 0; p < 4; ++p) r.c[p] = a.c[p] + b.c[p];
    return r;
  }
  friend OQuat operator-(const OQuat& a, const OQuat& b) {
    OQuat r;
    for (int p = 0; p < 4; ++p) r.c[p] = a.c[p] - b.c[p];
    return r;
  }
  friend bool operator==(const OQuat& a, const OQuat& b) {
    return a.c == b.c;
  }
};

// e_p * e_q = sign[p][q] * e_{index[p][q]} with e = (1, i, j, k).
constexpr int kMulSign[4][4] = {
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
};
constexpr int kMulIndex[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};

inline OQuat omul(const OQuat& a, const OQuat& b) {
  OQuat r;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      const ORat term = a.c[p] * b.c[q];
      const int idx = kMulIndex[p][q];
      r.c[idx] = kMulSign[p][q] > 0 ? r.c[idx] + term : r.c[idx] - term;
    }
  }
  return r;
}

using OMat = std::vector<std::vector<OQuat>>;

inline OMat omat(std::size_t rows, std::size_t cols) {
  return OMat(rows, std::vector<OQuat>(cols));
}

// result[i][j] = sum_k a[i][k] * b[k][j]
inline OMat orc(const OMat& a, const OMat& b) {
  OMat r = omat(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b[0].size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        r[i][j] = r[i][j] + omul(a[i][k], b[k][j]);
      }
    }
  }
  return r;
}

// result[i][j] = sum_k a[k][i] * b[j][k]; result is a.cols x b.rows.
inline OMat ocr(const OMat& a, const OMat& b) {
  OMat r = omat(a[0].size(), b.size());
  for (std::size_t i = 0; i < a[0].size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        r[i][j] = r[i][j] + omul(a[k][i], b[j][k]);
      }
    }
  }
  return r;
}

// Tiny deterministic generator for oracle-side instances; distinct from
// the library's generator on purpose.
struct OracleRng {
  std::uint64_t state;
  explicit OracleRng(std::uint64_t seed) : state(seed * 2654435761u + 1) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next() % (hi - lo + 1));
  }
};

inline ORat random_orat(OracleRng& rng) {
  return ORat(rng.range(-4, 4), rng.range(0, 1) == 0 ? 1 : 2);
}

inline OQuat random_oquat(OracleRng& rng) {
  const ORat w = random_orat(rng);
  const ORat x = random_orat(rng);
  const ORat y = random_orat(rng);
  const ORat z = random_orat(rng);
  return OQuat(w, x, y, z);
}

inline OMat random_omat(OracleRng& rng, std::size_t rows, std::size_t cols) {
  OMat m = omat(rows, cols);
  for (auto& row : m) {
    for (auto& q : row) q = random_oquat(rng);
  }
  return m;
}

// Conversions into library types (one direction only: oracle values feed
// the library, results come back for comparison against oracle results).

inline nccov::Rational to_lib(const ORat& r) {
  return nccov::Rational(r.num, r.den);
}

inline nccov::Quaternion to_lib(const OQuat& q) {
  return nccov::Quaternion(to_lib(q.c[0]), to_lib(q.c[1]), to_lib(q.c[2]),
                           to_lib(q.c[3]));
}

inline nccov::NcMatrix to_lib(const OMat& m) {
  nccov::NcMatrix r(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) r(i, j) = to_lib(m[i][j]);
  }
  return r;
}

inline bool lib_equals(const nccov::Quaternion& lib, const OQuat& q) {
  return lib == to_lib(q);
}

inline bool lib_equals(const nccov::NcMatrix& lib, const OMat& m) {
  if (lib.rows() != m.size() || lib.cols() != m[0].size()) return false;
  return lib == to_lib(m);
}

}  // namespace oracle
