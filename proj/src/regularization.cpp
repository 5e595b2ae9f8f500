#include "contact1d/regularization.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "contact1d/connections.hpp"
#include "contact1d/sweep.hpp"

namespace contact1d {

ThreeDeltaConfig::ThreeDeltaConfig(double u, double a, double k) : u_(u), a_(a), k_(k) {
  detail::require(std::isfinite(u) && u != 0.0, "epsilon strength must be nonzero");
  detail::require(std::isfinite(a) && a > 0.0, "half-spacing a must be positive");
  detail::require(std::isfinite(k) && k > 0.0, "wavenumber must be finite and positive");
}

Mat2R three_delta_connection(double v0, double v1, double a, double k) {
  detail::require(std::isfinite(v0) && std::isfinite(v1), "couplings must be finite");
  detail::require(std::isfinite(a) && a > 0.0, "half-spacing a must be positive");
  const Mat2R g = free_propagator(k, a);
  const Mat2R outer = v_delta(v1);
  return outer * (g * (v_delta(v0) * (g * outer)));
}

Mat2R three_delta_exact(const ThreeDeltaConfig& cfg) {
  detail::require(cfg.a() * cfg.k() < std::numbers::pi,
                  "a*k must stay below pi for the three-delta construction");
  return three_delta_connection(cfg.v0(), cfg.v1(), cfg.a(), cfg.k());
}

Mat2R three_delta_linearized_elements(double v0, double v1, double a, double k) {
  detail::require(std::isfinite(v0) && std::isfinite(v1), "couplings must be finite");
  detail::require(std::isfinite(a) && a >= 0.0, "half-spacing a must be non-negative");
  detail::require(std::isfinite(k), "wavenumber must be finite");
  const double k2 = k * k;
  const double diag = 1.0 + (v0 + 2.0 * v1 + v0 * v1 * a - k2 * a) * a;
  const double upper = v0 + 2.0 * v1 + 2.0 * v1 * a * (v0 + v1 - k2 * a) +
                       v0 * v1 * v1 * a * a - 2.0 * k2 * a;
  const double lower = 2.0 * a + v0 * a * a;
  return {diag, upper, lower, diag};
}

Mat2R three_delta_linearized_elements(const ThreeDeltaConfig& cfg) {
  return three_delta_linearized_elements(cfg.v0(), cfg.v1(), cfg.a(), cfg.k());
}

InteractionChain three_delta_chain(const ThreeDeltaConfig& cfg) {
  return InteractionChain({PointInteraction::delta(cfg.v1(), -cfg.a()),
                           PointInteraction::delta(cfg.v0(), 0.0),
                           PointInteraction::delta(cfg.v1(), cfg.a())});
}

bool ConvergenceReport::monotone_decreasing() const {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].error < points[i - 1].error)) return false;
  }
  return true;
}

LineFit least_squares_line(std::span<const double> x, std::span<const double> y) {
  detail::require(x.size() == y.size() && x.size() >= 2, "line fit needs >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  detail::require(sxx > 0.0, "line fit needs distinct abscissae");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

ConvergenceReport convergence_study(double u, double k, std::span<const double> a_list) {
  detail::require(a_list.size() >= 3, "convergence study needs at least three a values");
  detail::require(std::isfinite(u) && u != 0.0, "epsilon strength must be nonzero");
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    // Constructing the config validates a and k.
    const ThreeDeltaConfig cfg(u, a_list[i], k);
    detail::require(cfg.a() * cfg.k() < std::numbers::pi, "a*k must stay below pi");
    if (i > 0) {
      detail::require(a_list[i] < a_list[i - 1], "a values must be strictly decreasing");
    }
  }

  const std::vector<double> errors = parallel::convergence_errors(u, k, a_list);

  ConvergenceReport report{u, k, v_epsilon(u), {}, 0.0, 0.0};
  std::vector<double> log_a, log_e;
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    if (!(errors[i] > 0.0)) {
      detail::fail(ErrorCode::numerical_failure,
                   "zero error at a = " + std::to_string(a_list[i]) + "; cannot fit an order");
    }
    report.points.push_back({a_list[i], errors[i]});
    log_a.push_back(std::log(a_list[i]));
    log_e.push_back(std::log(errors[i]));
  }
  const LineFit fit = least_squares_line(log_a, log_e);
  report.fitted_order = fit.slope;
  report.fitted_constant = std::exp(fit.intercept);
  return report;
}

}  // namespace contact1d
