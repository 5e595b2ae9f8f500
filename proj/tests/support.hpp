#pragma once

// Test-only helpers: random generators and oracles that do not go through
// the library's solution paths.

#include <cmath>
#include <complex>
#include <random>

#include "contact1d/mat2.hpp"

namespace contact1d::testing {

/// Entries uniform in [-range, range], first row rescaled by 1/det.
/// Draws with |det| < 0.1 are rejected to keep the rescaling tame.
inline Mat2R random_unimodular(std::mt19937_64& rng, double range = 2.0) {
  std::uniform_real_distribution<double> dist(-range, range);
  while (true) {
    Mat2R m{dist(rng), dist(rng), dist(rng), dist(rng)};
    const double d = m.det();
    if (std::abs(d) < 0.1) continue;
    m.m11 /= d;
    m.m12 /= d;
    return m;
  }
}

/// Unimodular with t = s: t, u uniform in [-range, range], v = (t^2 - 1)/u.
/// These are exactly the parity-symmetric connection matrices.
inline Mat2R random_parity_symmetric(std::mt19937_64& rng, double range = 2.0) {
  std::uniform_real_distribution<double> dist(-range, range);
  while (true) {
    const double t = dist(rng), u = dist(rng);
    if (std::abs(u) < 0.1) continue;
    return {t, (t * t - 1.0) / u, u, t};
  }
}

struct Amplitudes {
  std::complex<double> A;
  std::complex<double> B;
};

/// Solves the wave-matching conditions directly by Cramer's rule:
///   (ik, 1)^T = V [[ik, -ik], [1, 1]] (A, B)^T.
inline Amplitudes matching_oracle(const Mat2R& v, double k) {
  using c = std::complex<double>;
  const c ik{0.0, k};
  const c a11 = v.m11 * ik + v.m12, a12 = -v.m11 * ik + v.m12;
  const c a21 = v.m21 * ik + v.m22, a22 = -v.m21 * ik + v.m22;
  const c det = a11 * a22 - a12 * a21;
  return {(ik * a22 - a12 * 1.0) / det, (a11 * 1.0 - a21 * ik) / det};
}

inline double entry(const Mat2R& m, int row, int col) {
  if (row == 0) return col == 0 ? m.m11 : m.m12;
  return col == 0 ? m.m21 : m.m22;
}

}  // namespace contact1d::testing

#define EXPECT_MAT_NEAR(actual, expected, tol) \
  EXPECT_LE(::contact1d::max_abs_diff((actual), (expected)), (tol))
