#include "contact1d/transfer.hpp"

#include <cmath>
#include <string>

#include "contact1d/connections.hpp"

namespace contact1d {

namespace {

void require_wavenumber(double k) {
  detail::require(std::isfinite(k) && k > 0.0,
                  "wavenumber must be finite and positive, got " + std::to_string(k));
}

}  // namespace

Mat2R free_propagator(double k, double x) {
  require_wavenumber(k);
  detail::require(std::isfinite(x), "propagation length must be finite");
  const double c = std::cos(k * x);
  const double s = std::sin(k * x);
  return {c, -k * s, s / k, c};
}

Mat2R free_propagator_linearized(double k, double a) {
  detail::require(std::isfinite(k), "wavenumber must be finite");
  detail::require(std::isfinite(a) && a >= 0.0, "gap must be finite and non-negative");
  return {1.0, -k * k * a, a, 1.0};
}

PointInteraction PointInteraction::delta(double v, double position) {
  detail::require(std::isfinite(v), "delta strength must be finite");
  detail::require(std::isfinite(position), "position must be finite");
  return {Delta{v}, position};
}

PointInteraction PointInteraction::epsilon(double u, double position) {
  detail::require(std::isfinite(u), "epsilon strength must be finite");
  detail::require(std::isfinite(position), "position must be finite");
  return {Epsilon{u}, position};
}

PointInteraction PointInteraction::general(const Mat2R& m, double position) {
  require_unimodular(m, kPrimitiveDetTolerance, "point interaction matrix");
  detail::require(std::isfinite(position), "position must be finite");
  return {General{m}, position};
}

PointInteraction::Kind PointInteraction::kind() const {
  switch (kind_.index()) {
    case 0: return Kind::delta;
    case 1: return Kind::epsilon;
    default: return Kind::general;
  }
}

double PointInteraction::strength() const {
  if (const auto* d = std::get_if<Delta>(&kind_)) return d->v;
  if (const auto* e = std::get_if<Epsilon>(&kind_)) return e->u;
  detail::fail(ErrorCode::invalid_argument, "general interaction has no scalar strength");
}

Mat2R PointInteraction::matrix() const {
  if (const auto* d = std::get_if<Delta>(&kind_)) return v_delta(d->v);
  if (const auto* e = std::get_if<Epsilon>(&kind_)) return v_epsilon(e->u);
  return std::get<General>(kind_).m;
}

PointInteraction PointInteraction::moved_to(double position) const {
  detail::require(std::isfinite(position), "position must be finite");
  return {kind_, position};
}

InteractionChain::InteractionChain(std::vector<PointInteraction> interactions)
    : sites_(std::move(interactions)) {
  for (std::size_t i = 1; i < sites_.size(); ++i) {
    if (!(sites_[i].position() > sites_[i - 1].position())) {
      detail::fail(ErrorCode::non_increasing_positions,
                   "chain positions must be strictly increasing (site " +
                       std::to_string(i) + ")");
    }
  }
}

InteractionChain InteractionChain::translated(double dx) const {
  std::vector<PointInteraction> moved;
  moved.reserve(sites_.size());
  for (const auto& p : sites_) moved.push_back(p.moved_to(p.position() + dx));
  return InteractionChain(std::move(moved));
}

Mat2R chain_connection(const InteractionChain& chain, double k) {
  require_wavenumber(k);
  const auto sites = chain.interactions();
  if (sites.empty()) return Mat2R::identity();
  Mat2R total = sites.front().matrix();
  for (std::size_t i = 1; i < sites.size(); ++i) {
    const double gap = sites[i].position() - sites[i - 1].position();
    total = sites[i].matrix() * (free_propagator(k, gap) * total);
  }
  return total;
}

}  // namespace contact1d
