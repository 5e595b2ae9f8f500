#include "contact1d/connections.hpp"

#include <cmath>
#include <string>

namespace contact1d {

Mat2R v_delta(double v) {
  detail::require(std::isfinite(v), "delta strength must be finite");
  return {1.0, v, 0.0, 1.0};
}

Mat2R v_epsilon(double u) {
  detail::require(std::isfinite(u), "epsilon strength must be finite");
  return {1.0, 0.0, u, 1.0};
}

void require_unimodular(const Mat2R& m, double tolerance, std::string_view what) {
  if (!m.finite()) {
    detail::fail(ErrorCode::not_unimodular, std::string(what) + " has non-finite entries");
  }
  const double dev = std::abs(m.det() - 1.0);
  if (!(dev <= tolerance)) {
    detail::fail(ErrorCode::not_unimodular,
                 std::string(what) + " is not unimodular (det = " + std::to_string(m.det()) +
                     ")");
  }
}

Mat2R v_general(double t, double v, double u, double s) {
  const Mat2R m{t, v, u, s};
  require_unimodular(m, kPrimitiveDetTolerance, "connection matrix");
  return m;
}

std::string_view to_string(FactorKind kind) {
  return kind == FactorKind::delta ? "delta" : "epsilon";
}

std::string_view to_string(DecompositionBranch branch) {
  switch (branch) {
    case DecompositionBranch::delta_epsilon_delta: return "delta-epsilon-delta";
    case DecompositionBranch::epsilon_delta_epsilon: return "epsilon-delta-epsilon";
    case DecompositionBranch::diagonal: return "diagonal";
  }
  return "unknown";
}

Mat2R DecompositionStep::matrix() const {
  return kind == FactorKind::delta ? v_delta(strength) : v_epsilon(strength);
}

Mat2R Decomposition::product() const {
  Mat2R p = Mat2R::identity();
  for (const auto& step : steps) p = p * step.matrix();
  return p;
}

namespace {

Decomposition lower_off_diagonal_form(const Mat2R& m) {
  return {DecompositionBranch::delta_epsilon_delta,
          {{FactorKind::delta, (m.m11 - 1.0) / m.m21},
           {FactorKind::epsilon, m.m21},
           {FactorKind::delta, (m.m22 - 1.0) / m.m21}}};
}

Decomposition upper_off_diagonal_form(const Mat2R& m) {
  return {DecompositionBranch::epsilon_delta_epsilon,
          {{FactorKind::epsilon, (m.m22 - 1.0) / m.m12},
           {FactorKind::delta, m.m12},
           {FactorKind::epsilon, (m.m11 - 1.0) / m.m12}}};
}

Decomposition diagonal_form(const Mat2R& m) {
  // ts = 1 + uv with |uv| <= threshold^2, so t cannot vanish here.
  detail::require(std::abs(m.m11) > 0.0, "diagonal connection matrix with t = 0");
  const double rho = std::sqrt(std::abs(m.m11));
  const double sign = m.m11 > 0.0 ? 1.0 : -1.0;
  return {DecompositionBranch::diagonal,
          {{FactorKind::delta, rho},
           {FactorKind::epsilon, -1.0 / rho},
           {FactorKind::delta, rho},
           {FactorKind::delta, -sign / rho},
           {FactorKind::epsilon, sign * rho},
           {FactorKind::delta, -sign / rho}}};
}

}  // namespace

Decomposition decompose(const Mat2R& m) {
  require_unimodular(m, kComposedDetTolerance, "matrix to decompose");
  const bool has_u = std::abs(m.m21) > kBranchThreshold;
  const bool has_v = std::abs(m.m12) > kBranchThreshold;
  if (!has_u && !has_v) return diagonal_form(m);
  if (!has_v) return lower_off_diagonal_form(m);
  if (!has_u) return upper_off_diagonal_form(m);

  Decomposition lower = lower_off_diagonal_form(m);
  Decomposition upper = upper_off_diagonal_form(m);
  const double lower_err = max_abs_diff(lower.product(), m);
  const double upper_err = max_abs_diff(upper.product(), m);
  return upper_err < lower_err ? upper : lower;
}

InteractionChain decomposition_to_chain(const Decomposition& d, double b) {
  detail::require(std::isfinite(b) && b > 0.0, "factor spacing must be positive");
  const auto n = d.steps.size();
  std::vector<PointInteraction> sites;
  sites.reserve(n);
  const double half_width = 0.5 * static_cast<double>(n == 0 ? 0 : n - 1);
  // Walk the factors right to left: the rightmost one acts first.
  for (std::size_t j = 0; j < n; ++j) {
    const auto& step = d.steps[n - 1 - j];
    const double x = (static_cast<double>(j) - half_width) * b;
    sites.push_back(step.kind == FactorKind::delta ? PointInteraction::delta(step.strength, x)
                                                   : PointInteraction::epsilon(step.strength, x));
  }
  return InteractionChain(std::move(sites));
}

}  // namespace contact1d
