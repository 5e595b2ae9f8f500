#include "contact1d/sweep.hpp"

#include <cmath>
#include <exception>
#include <numbers>

#include "contact1d/regularization.hpp"

namespace contact1d {

std::vector<double> make_grid(double lo, double hi, int count, bool log) {
  detail::require(std::isfinite(lo) && std::isfinite(hi), "grid bounds must be finite");
  detail::require(count >= 1, "grid needs at least one point");
  detail::require(!(log && lo <= 0.0), "log grid needs a positive lower bound");
  detail::require(lo <= hi, "grid lower bound exceeds upper bound");
  std::vector<double> grid(static_cast<std::size_t>(count));
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  const double n = static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / n;
    grid[static_cast<std::size_t>(i)] =
        log ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

namespace {

void require_wavenumbers(std::span<const double> ks) {
  for (double k : ks) {
    detail::require(std::isfinite(k) && k > 0.0, "sweep wavenumbers must be positive");
  }
}

void require_gaps(double u, double k, std::span<const double> as) {
  for (double a : as) {
    const ThreeDeltaConfig cfg(u, a, k);
    detail::require(cfg.a() * cfg.k() < std::numbers::pi, "a*k must stay below pi");
  }
}

// Runs body(i) for i in [0, n), in parallel when requested. The first
// exception by index is rethrown after the loop so failures are as
// deterministic as results.
template <class Body>
void for_each_index(std::size_t n, bool use_omp, Body&& body) {
  if (!use_omp) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> failures(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

std::vector<ScatteringResult> scatter_sweep_impl(const Mat2R& v, std::span<const double> ks,
                                                 bool use_omp) {
  require_wavenumbers(ks);
  require_unimodular(v, kComposedDetTolerance, "connection matrix");
  std::vector<ScatteringResult> out(ks.size());
  for_each_index(ks.size(), use_omp, [&](std::size_t i) { out[i] = scatter(v, ks[i]); });
  return out;
}

std::vector<ScatteringResult> scatter_chain_sweep_impl(const InteractionChain& chain,
                                                       std::span<const double> ks,
                                                       bool use_omp) {
  require_wavenumbers(ks);
  std::vector<ScatteringResult> out(ks.size());
  for_each_index(ks.size(), use_omp,
                 [&](std::size_t i) { out[i] = scatter_chain(chain, ks[i]); });
  return out;
}

std::vector<ExchangeResult> identical_sweep_impl(const Mat2R& v, std::span<const double> ks,
                                                 Statistics statistics, bool use_omp) {
  require_wavenumbers(ks);
  require_unimodular(v, kComposedDetTolerance, "connection matrix");
  std::vector<ExchangeResult> out(ks.size());
  for_each_index(ks.size(), use_omp,
                 [&](std::size_t i) { out[i] = scatter_identical(v, ks[i], statistics); });
  return out;
}

std::vector<Decomposition> decompose_batch_impl(std::span<const Mat2R> ms, bool use_omp) {
  std::vector<Decomposition> out(ms.size());
  for_each_index(ms.size(), use_omp, [&](std::size_t i) { out[i] = decompose(ms[i]); });
  return out;
}

std::vector<double> convergence_errors_impl(double u, double k, std::span<const double> as,
                                            bool use_omp) {
  require_gaps(u, k, as);
  const Mat2R target = v_epsilon(u);
  std::vector<double> out(as.size());
  for_each_index(as.size(), use_omp, [&](std::size_t i) {
    out[i] = max_abs_diff(three_delta_exact(ThreeDeltaConfig(u, as[i], k)), target);
  });
  return out;
}

}  // namespace

namespace serial {

std::vector<ScatteringResult> scatter_sweep(const Mat2R& v, std::span<const double> ks) {
  return scatter_sweep_impl(v, ks, false);
}
std::vector<ScatteringResult> scatter_chain_sweep(const InteractionChain& chain,
                                                  std::span<const double> ks) {
  return scatter_chain_sweep_impl(chain, ks, false);
}
std::vector<ExchangeResult> identical_sweep(const Mat2R& v, std::span<const double> ks,
                                            Statistics statistics) {
  return identical_sweep_impl(v, ks, statistics, false);
}
std::vector<Decomposition> decompose_batch(std::span<const Mat2R> ms) {
  return decompose_batch_impl(ms, false);
}
std::vector<double> convergence_errors(double u, double k, std::span<const double> as) {
  return convergence_errors_impl(u, k, as, false);
}

}  // namespace serial

namespace parallel {

std::vector<ScatteringResult> scatter_sweep(const Mat2R& v, std::span<const double> ks) {
  return scatter_sweep_impl(v, ks, true);
}
std::vector<ScatteringResult> scatter_chain_sweep(const InteractionChain& chain,
                                                  std::span<const double> ks) {
  return scatter_chain_sweep_impl(chain, ks, true);
}
std::vector<ExchangeResult> identical_sweep(const Mat2R& v, std::span<const double> ks,
                                            Statistics statistics) {
  return identical_sweep_impl(v, ks, statistics, true);
}
std::vector<Decomposition> decompose_batch(std::span<const Mat2R> ms) {
  return decompose_batch_impl(ms, true);
}
std::vector<double> convergence_errors(double u, double k, std::span<const double> as) {
  return convergence_errors_impl(u, k, as, true);
}

}  // namespace parallel
}  // namespace contact1d
