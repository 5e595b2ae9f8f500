#pragma once

#include <span>
#include <variant>
#include <vector>

#include "contact1d/error.hpp"
#include "contact1d/mat2.hpp"

namespace contact1d {

/// |det - 1| allowed for a single primitive or user-supplied matrix.
inline constexpr double kPrimitiveDetTolerance = 1e-12;
/// |det - 1| allowed for composed products (accumulated rounding).
inline constexpr double kComposedDetTolerance = 1e-10;

inline Mat2R compose(const Mat2R& a, const Mat2R& b) { return a * b; }

/// Free-space transfer matrix exp(H(k) x) with H(k) = [[0, -k^2], [1, 0]]:
///
///   [[ cos kx,     -k sin kx ],
///    [ sin(kx)/k,   cos kx   ]]
///
/// Propagates (phi', phi) from x0 to x0 + x. Requires k > 0.
Mat2R free_propagator(double k, double x);

/// First-order expansion [[1, -k^2 a], [a, 1]] of free_propagator(k, a).
/// Its determinant is 1 + k^2 a^2, so it is *not* unimodular; it exists to
/// reproduce the small-gap element formulas of the three-delta construction.
Mat2R free_propagator_linearized(double k, double a);

/// A contact interaction placed at a point on the line.
class PointInteraction {
 public:
  enum class Kind { delta, epsilon, general };

  static PointInteraction delta(double v, double position = 0.0);
  static PointInteraction epsilon(double u, double position = 0.0);
  /// Throws ErrorCode::not_unimodular if |det - 1| > kPrimitiveDetTolerance.
  static PointInteraction general(const Mat2R& m, double position = 0.0);

  Kind kind() const;
  double position() const { return position_; }
  /// Strength v (delta) or u (epsilon); throws for general interactions.
  double strength() const;
  /// Connection matrix mapping (phi', phi) at position_- to position_+.
  Mat2R matrix() const;

  PointInteraction moved_to(double position) const;

 private:
  struct Delta { double v; };
  struct Epsilon { double u; };
  struct General { Mat2R m; };

  PointInteraction(std::variant<Delta, Epsilon, General> kind, double position)
      : kind_(kind), position_(position) {}

  std::variant<Delta, Epsilon, General> kind_;
  double position_;
};

/// Point interactions at strictly increasing positions.
class InteractionChain {
 public:
  InteractionChain() = default;
  /// Throws ErrorCode::non_increasing_positions unless positions strictly
  /// increase.
  explicit InteractionChain(std::vector<PointInteraction> interactions);

  std::span<const PointInteraction> interactions() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }

  InteractionChain translated(double dx) const;

 private:
  std::vector<PointInteraction> sites_;
};

/// Total connection matrix from just left of the first interaction to just
/// right of the last:  P_n G(k; x_n - x_{n-1}) ... G(k; x_2 - x_1) P_1.
/// Empty chain gives the identity. Requires k > 0.
Mat2R chain_connection(const InteractionChain& chain, double k);

}  // namespace contact1d
