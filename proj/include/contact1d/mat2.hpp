#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace contact1d {

using complex = std::complex<double>;

/// Real 2x2 matrix acting on the column (phi', phi).
///
/// Entries are raw doubles. When the matrix is a connection matrix the
/// off-diagonals carry units (m12 ~ 1/length, m21 ~ length); that is tracked
/// by convention only.
struct Mat2R {
  double m11 = 1.0;
  double m12 = 0.0;
  double m21 = 0.0;
  double m22 = 1.0;

  static constexpr Mat2R identity() { return {1.0, 0.0, 0.0, 1.0}; }

  constexpr double det() const { return m11 * m22 - m12 * m21; }
  constexpr double trace() const { return m11 + m22; }
  constexpr Mat2R transpose() const { return {m11, m21, m12, m22}; }

  /// True inverse (adjugate over determinant); exact adjugate when det == 1.
  constexpr Mat2R inverse() const {
    const double d = det();
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
  }

  bool finite() const {
    return std::isfinite(m11) && std::isfinite(m12) && std::isfinite(m21) &&
           std::isfinite(m22);
  }

  friend constexpr Mat2R operator*(const Mat2R& a, const Mat2R& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }

  friend constexpr bool operator==(const Mat2R&, const Mat2R&) = default;
};

/// Entrywise max norm of a - b. Used for every matrix comparison.
inline double max_abs_diff(const Mat2R& a, const Mat2R& b) {
  return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12),
                   std::abs(a.m21 - b.m21), std::abs(a.m22 - b.m22)});
}

/// The pair (phi'(x), phi(x)).
struct WaveState {
  complex dphi;
  complex phi;

  bool is_null() const { return dphi == complex{} && phi == complex{}; }
};

inline WaveState operator*(const Mat2R& m, const WaveState& w) {
  return {m.m11 * w.dphi + m.m12 * w.phi, m.m21 * w.dphi + m.m22 * w.phi};
}

}  // namespace contact1d
