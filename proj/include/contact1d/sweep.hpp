#pragma once

// Data-parallel sweeps. Every kernel exists twice: a plain loop in
// contact1d::serial (the reference the tests compare against) and an OpenMP
// loop in contact1d::parallel. Results are written by index, so both produce
// identical vectors in input order.

#include <span>
#include <vector>

#include "contact1d/connections.hpp"
#include "contact1d/scattering.hpp"

namespace contact1d {

/// count points from lo to hi inclusive; geometric spacing when log is set.
std::vector<double> make_grid(double lo, double hi, int count, bool log);

namespace serial {

std::vector<ScatteringResult> scatter_sweep(const Mat2R& v, std::span<const double> ks);
std::vector<ScatteringResult> scatter_chain_sweep(const InteractionChain& chain,
                                                  std::span<const double> ks);
std::vector<ExchangeResult> identical_sweep(const Mat2R& v, std::span<const double> ks,
                                            Statistics statistics);
std::vector<Decomposition> decompose_batch(std::span<const Mat2R> ms);
/// ||three_delta_exact(u, a, k) - V_epsilon(u)||_max for each a.
std::vector<double> convergence_errors(double u, double k, std::span<const double> as);

}  // namespace serial

namespace parallel {

std::vector<ScatteringResult> scatter_sweep(const Mat2R& v, std::span<const double> ks);
std::vector<ScatteringResult> scatter_chain_sweep(const InteractionChain& chain,
                                                  std::span<const double> ks);
std::vector<ExchangeResult> identical_sweep(const Mat2R& v, std::span<const double> ks,
                                            Statistics statistics);
std::vector<Decomposition> decompose_batch(std::span<const Mat2R> ms);
std::vector<double> convergence_errors(double u, double k, std::span<const double> as);

}  // namespace parallel
}  // namespace contact1d
