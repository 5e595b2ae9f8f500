#pragma once

#include <string_view>

#include "contact1d/mat2.hpp"
#include "contact1d/transfer.hpp"

namespace contact1d {

/// Incident wave A e^{ikx} + B e^{-ikx} on the left, transmitted e^{ikx} on
/// the right (unit outgoing amplitude).
struct ScatteringResult {
  double k;
  complex A;
  complex B;
  double T;  // |1/A|^2
  double R;  // |B/A|^2
};

/// Amplitudes from (A, B)^T = 1/(2ik) [[1, ik], [-1, ik]] V^{-1} (ik, 1)^T.
/// Throws for k <= 0 or |det V - 1| > kComposedDetTolerance.
ScatteringResult scatter(const Mat2R& v, double k);

/// Scattering through a finite chain. Plane waves are referenced to the
/// first site on the left and to the last site on the right, which reduces
/// the problem to scatter(chain_connection(chain, k), k).
ScatteringResult scatter_chain(const InteractionChain& chain, double k);

struct TransmissionReflection {
  double T;
  double R;
};

/// T = k^2 / (k^2 + (v/2)^2), R = 1 - T.
TransmissionReflection t_delta_closed(double v, double k);
/// T = (2/u)^2 / (k^2 + (2/u)^2), R = 1 - T; u = 0 gives T = 1.
TransmissionReflection t_epsilon_closed(double u, double k);

struct DualityReport {
  double v;
  double k;
  TransmissionReflection delta;  // at k
  TransmissionReflection epsilon;  // u = v, at 1/k
  double max_deviation;
  bool holds;  // max_deviation <= kDualityTolerance
};

inline constexpr double kDualityTolerance = 1e-12;

/// Compares the delta potential at k with the epsilon potential of equal
/// strength at 1/k. Requires v != 0, k > 0.
DualityReport duality_check(double v, double k);

inline constexpr double kParityTolerance = 1e-10;

enum class Statistics { boson, fermion };

std::string_view to_string(Statistics s);

struct ExchangeResult {
  double k;
  Statistics statistics;
  complex C;
};

/// Relative-coordinate scattering of two identical particles:
///
///   [ [[-ik, ik], [1, 1]]  -/+  V [[ik, -ik], [1, 1]] ] (1, C)^T = 0,
///
/// upper sign for bosons. The ansatz is exchange symmetric, so V must be
/// parity symmetric (t = s to kParityTolerance relative); otherwise
/// ErrorCode::invalid_argument. C is taken from the row with the larger |C|
/// coefficient; the other row must vanish to 1e-9 of its norm, else
/// ErrorCode::numerical_failure.
ExchangeResult scatter_identical(const Mat2R& v, double k, Statistics statistics);

/// (2ik + v) / (2ik - v): bosons through V_delta(v).
complex c_delta_boson_closed(double v, double k);
/// (2ik + 4/u) / (2ik - 4/u): fermions through V_epsilon(u).
complex c_epsilon_fermion_closed(double u, double k);

struct ExchangeDualityReport {
  double v;
  double u;
  double k;
  complex c_epsilon_fermion;
  complex c_delta_boson;
  double deviation;
  bool holds;
};

/// Fermions through V_epsilon(u) against bosons through V_delta(v).
/// Throws ErrorCode::duality_precondition unless |vu - 4| <= 1e-12.
ExchangeDualityReport fermion_boson_duality_check(double v, double u, double k);

}  // namespace contact1d
