#pragma once

#include <string_view>
#include <vector>

#include "contact1d/mat2.hpp"
#include "contact1d/transfer.hpp"

namespace contact1d {

/// Connection matrix of the delta potential v*delta(x): phi continuous,
/// phi' jumps by v*phi.
Mat2R v_delta(double v);

/// Connection matrix of the epsilon potential u*epsilon(x): phi' continuous,
/// phi jumps by u*phi'.
Mat2R v_epsilon(double u);

/// [[t, v], [u, s]]; throws ErrorCode::not_unimodular unless
/// |ts - uv - 1| <= kPrimitiveDetTolerance.
Mat2R v_general(double t, double v, double u, double s);

/// Throws ErrorCode::not_unimodular when |det(m) - 1| > tolerance or any
/// entry is not finite.
void require_unimodular(const Mat2R& m, double tolerance, std::string_view what);

enum class FactorKind { delta, epsilon };

std::string_view to_string(FactorKind kind);

struct DecompositionStep {
  FactorKind kind;
  double strength;

  Mat2R matrix() const;
  friend bool operator==(const DecompositionStep&, const DecompositionStep&) = default;
};

enum class DecompositionBranch {
  delta_epsilon_delta,  // u != 0
  epsilon_delta_epsilon,  // v != 0
  diagonal,  // u = v = 0, six factors
};

std::string_view to_string(DecompositionBranch branch);

/// Steps are listed in matrix-product order: steps.front() is the leftmost
/// factor, i.e. the one acting last (on the right side of the region).
struct Decomposition {
  DecompositionBranch branch = DecompositionBranch::delta_epsilon_delta;
  std::vector<DecompositionStep> steps;

  Mat2R product() const;
};

/// Off-diagonal magnitude below which an entry counts as zero when picking a
/// branch of decompose().
inline constexpr double kBranchThreshold = 1e-9;

/// Factor a unimodular matrix into delta/epsilon primitives.
///
///   u != 0:     V = D((t-1)/u) E(u) D((s-1)/u)
///   v != 0:     V = E((s-1)/v) D(v) E((t-1)/v)
///   u = v = 0:  diag(+-rho^2, +-rho^-2) =
///               D(rho) E(-1/rho) D(rho) D(-+1/rho) E(+-rho) D(-+1/rho),
///               rho = sqrt|t|, signs following sign(t).
///
/// When both off-diagonals exceed kBranchThreshold both three-factor forms
/// are built and the one with the smaller reconstruction error is kept; ties
/// go to the delta-epsilon-delta form.
///
/// Throws ErrorCode::not_unimodular if |det - 1| > kComposedDetTolerance.
Decomposition decompose(const Mat2R& m);

/// Places the factors as physical point interactions spaced by b, centred on
/// the origin. The rightmost factor sits at the smallest position, so
/// chain_connection(result, k) -> d.product() as b -> 0.
InteractionChain decomposition_to_chain(const Decomposition& d, double b);

}  // namespace contact1d
