#pragma once

#include <span>
#include <vector>

#include "contact1d/mat2.hpp"
#include "contact1d/transfer.hpp"

namespace contact1d {

/// Three deltas v1 d(x+a) + v0 d(x) + v1 d(x-a) with the couplings scaled
/// so that the pair tends to the epsilon potential of strength u:
///
///   v0(a) = u / a^2,    v1(a) = 2/u - 1/a.
class ThreeDeltaConfig {
 public:
  /// Requires finite u != 0, a > 0, k > 0.
  ThreeDeltaConfig(double u, double a, double k);

  double u() const { return u_; }
  double a() const { return a_; }
  double k() const { return k_; }
  double v0() const { return u_ / (a_ * a_); }
  double v1() const { return 2.0 / u_ - 1.0 / a_; }

 private:
  double u_;
  double a_;
  double k_;
};

/// V_delta(v1) G(k;a) V_delta(v0) G(k;a) V_delta(v1) for arbitrary fixed
/// couplings. Requires a > 0, k > 0.
Mat2R three_delta_connection(double v0, double v1, double a, double k);

/// Exact connection matrix from (-a)_- to a_+ of the scaled configuration.
/// Additionally requires a*k < pi.
Mat2R three_delta_exact(const ThreeDeltaConfig& cfg);

/// Closed-form entries of the product built with the linearized propagator:
///
///   m11 = m22 = 1 + (v0 + 2 v1 + v0 v1 a - k^2 a) a
///   m12       = v0 + 2 v1 + 2 v1 a (v0 + v1 - k^2 a) + v0 v1^2 a^2 - 2 k^2 a
///   m21       = 2a + v0 a^2
Mat2R three_delta_linearized_elements(const ThreeDeltaConfig& cfg);
/// Same formulas for raw couplings; a = 0 is allowed here.
Mat2R three_delta_linearized_elements(double v0, double v1, double a, double k);

/// The scaled configuration as a physical chain at positions -a, 0, a.
InteractionChain three_delta_chain(const ThreeDeltaConfig& cfg);

struct ConvergencePoint {
  double a;
  double error;  // ||three_delta_exact - V_epsilon(u)||_max
};

struct ConvergenceReport {
  double u;
  double k;
  Mat2R target;
  std::vector<ConvergencePoint> points;  // a strictly decreasing
  double fitted_order;  // slope of log(error) against log(a)
  double fitted_constant;  // exp(intercept): error ~ C a^p

  bool monotone_decreasing() const;
};

/// Error of the three-delta matrix against V_epsilon(u) over a strictly
/// decreasing list of at least three half-spacings.
ConvergenceReport convergence_study(double u, double k, std::span<const double> a_list);

/// Unweighted least-squares slope and intercept of y against x.
struct LineFit {
  double slope;
  double intercept;
};
LineFit least_squares_line(std::span<const double> x, std::span<const double> y);

}  // namespace contact1d
