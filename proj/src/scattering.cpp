#include "contact1d/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "contact1d/connections.hpp"

namespace contact1d {

namespace {

constexpr complex I{0.0, 1.0};

void require_wavenumber(double k) {
  detail::require(std::isfinite(k) && k > 0.0,
                  "wavenumber must be finite and positive, got " + std::to_string(k));
}

// Assumes a validated matrix; shared by scatter and scatter_chain.
ScatteringResult solve_one_sided(const Mat2R& v, double k) {
  const Mat2R inv = v.inverse();
  const complex ik = I * k;
  // w = V^{-1} (ik, 1)^T
  const complex w1 = inv.m11 * ik + inv.m12;
  const complex w2 = inv.m21 * ik + inv.m22;
  const complex A = (w1 + ik * w2) / (2.0 * ik);
  const complex B = (-w1 + ik * w2) / (2.0 * ik);
  const double a2 = std::norm(A);
  return {k, A, B, 1.0 / a2, std::norm(B) / a2};
}

}  // namespace

ScatteringResult scatter(const Mat2R& v, double k) {
  require_wavenumber(k);
  require_unimodular(v, kComposedDetTolerance, "connection matrix");
  return solve_one_sided(v, k);
}

ScatteringResult scatter_chain(const InteractionChain& chain, double k) {
  const Mat2R total = chain_connection(chain, k);
  require_unimodular(total, kComposedDetTolerance, "chain connection matrix");
  return solve_one_sided(total, k);
}

TransmissionReflection t_delta_closed(double v, double k) {
  require_wavenumber(k);
  detail::require(std::isfinite(v), "delta strength must be finite");
  const double h = 0.5 * v;
  const double T = k * k / (k * k + h * h);
  return {T, h * h / (k * k + h * h)};
}

TransmissionReflection t_epsilon_closed(double u, double k) {
  require_wavenumber(k);
  detail::require(std::isfinite(u), "epsilon strength must be finite");
  if (u == 0.0) return {1.0, 0.0};
  const double g = 2.0 / u;
  return {g * g / (k * k + g * g), k * k / (k * k + g * g)};
}

DualityReport duality_check(double v, double k) {
  detail::require(std::isfinite(v) && v != 0.0, "duality check needs a nonzero strength");
  require_wavenumber(k);
  const TransmissionReflection d = t_delta_closed(v, k);
  const TransmissionReflection e = t_epsilon_closed(v, 1.0 / k);
  const double dev = std::max(std::abs(d.T - e.T), std::abs(d.R - e.R));
  return {v, k, d, e, dev, dev <= kDualityTolerance};
}

std::string_view to_string(Statistics s) {
  return s == Statistics::boson ? "boson" : "fermion";
}

ExchangeResult scatter_identical(const Mat2R& v, double k, Statistics statistics) {
  require_wavenumber(k);
  require_unimodular(v, kComposedDetTolerance, "connection matrix");
  // x -> -x maps V to [[s, v], [u, t]]; an exchange-symmetric wave needs V
  // to be its own mirror image.
  const double diag_scale = std::max({1.0, std::abs(v.m11), std::abs(v.m22)});
  if (!(std::abs(v.m11 - v.m22) <= kParityTolerance * diag_scale)) {
    detail::fail(ErrorCode::invalid_argument,
                 "identical-particle scattering needs a parity-symmetric matrix (t = s)");
  }
  const complex ik = I * k;
  // sign of the V term: minus for bosons, plus for fermions
  const double s = statistics == Statistics::boson ? -1.0 : 1.0;
  // V [[ik, -ik], [1, 1]]
  const complex p11 = v.m11 * ik + v.m12;
  const complex p12 = -v.m11 * ik + v.m12;
  const complex p21 = v.m21 * ik + v.m22;
  const complex p22 = -v.m21 * ik + v.m22;
  const complex r11 = -ik + s * p11;
  const complex r12 = ik + s * p12;
  const complex r21 = 1.0 + s * p21;
  const complex r22 = 1.0 + s * p22;

  const bool first = std::abs(r12) >= std::abs(r22);
  const complex pivot = first ? r12 : r22;
  if (pivot == complex{}) {
    detail::fail(ErrorCode::numerical_failure, "exchange system has no C coefficient");
  }
  const complex C = -(first ? r11 : r21) / pivot;

  const complex other_c0 = first ? r21 : r11;
  const complex other_c1 = first ? r22 : r12;
  const double residual = std::abs(other_c0 + other_c1 * C);
  const double row_norm = std::hypot(std::abs(other_c0), std::abs(other_c1));
  if (residual > 1e-9 * row_norm) {
    detail::fail(ErrorCode::numerical_failure,
                 "exchange system rows are inconsistent (residual " + std::to_string(residual) +
                     ")");
  }
  return {k, statistics, C};
}

complex c_delta_boson_closed(double v, double k) {
  require_wavenumber(k);
  return (2.0 * I * k + v) / (2.0 * I * k - v);
}

complex c_epsilon_fermion_closed(double u, double k) {
  require_wavenumber(k);
  detail::require(std::isfinite(u) && u != 0.0, "epsilon strength must be nonzero");
  return (2.0 * I * k + 4.0 / u) / (2.0 * I * k - 4.0 / u);
}

ExchangeDualityReport fermion_boson_duality_check(double v, double u, double k) {
  require_wavenumber(k);
  if (!(std::abs(v * u - 4.0) <= 1e-12)) {
    detail::fail(ErrorCode::duality_precondition,
                 "exchange duality requires v*u = 4, got " + std::to_string(v * u));
  }
  const complex cf = scatter_identical(v_epsilon(u), k, Statistics::fermion).C;
  const complex cb = scatter_identical(v_delta(v), k, Statistics::boson).C;
  const double dev = std::abs(cf - cb);
  return {v, u, k, cf, cb, dev, dev <= kDualityTolerance};
}

}  // namespace contact1d
