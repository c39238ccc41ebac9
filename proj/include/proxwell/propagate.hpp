#pragma once

#include <span>
#include <vector>

#include "proxwell/stack.hpp"

namespace proxwell {

// (psi, dpsi/dx) at a point.
struct StateVector {
  double psi = 0.0;
  double dpsi = 0.0;
};

// 2x2 map carrying (psi, dpsi) across one constant-potential layer.
// The map is unimodular: m11*m22 - m12*m21 = 1 (Wronskian preservation).
struct LayerPropagator {
  double m11, m12, m21, m22;
  double det() const { return m11 * m22 - m12 * m21; }
};

// Boundary residual at the right wall after propagating the left-wall initial
// vector across the stack. The unrescaled residual is value * exp(scale_log);
// all divided-out factors are positive, so sign and zeros are those of the
// unrescaled residual. E is an eigenvalue iff value == 0.
struct MismatchResult {
  double value;
  double scale_log;
};

// Propagator across a single layer at trial energy E. With u = E - V:
//   u > 0: rotation-like with k = sqrt(u)
//   u < 0: hyperbolic with q = sqrt(-u)
//   u = 0 (within a relative tolerance): the shear [[1, w], [0, 1]]
// Entries are the plain cosh/sinh values; for overflow-safe propagation use
// mismatch(), which factors large exponents out of the state.
LayerPropagator layer_propagator(const Layer& layer, double energy);

// Left-wall initial vector: (0, 1) for Dirichlet, (1, 0) for Neumann. The
// state is rescaled to unit max-norm before entering each subsequent layer,
// with the log of every divided-out factor accumulated in scale_log. The
// returned value is psi at the right wall for a Dirichlet right end, dpsi for
// a Neumann one.
MismatchResult mismatch(const PotentialStack& stack, double energy);

enum class Sign { negative, zero, positive };

// Sign of mismatch at each energy; energies must be strictly increasing.
std::vector<Sign> mismatch_sign_profile(const PotentialStack& stack,
                                        std::span<const double> energies);

namespace detail {

// |E - V| below this (relative to max(1, |V|)) is treated as u = 0, avoiding
// the sin(kw)/k cancellation as k -> 0.
inline constexpr double kDegenerateTol = 1e-12;

// Advances the state across one layer in place. For deep evanescent layers
// the factor e^{qw} is divided out of the matrix before applying it; the log
// of the divided-out factor is returned (0 otherwise).
double advance(StateVector& state, const Layer& layer, double energy);

struct EdgeState {
  StateVector state;  // rescaled to unit max-norm
  double log_scale;   // cumulative log of divided-out positive factors
};

// State at every layer edge (left wall, interior edges, right wall). The true
// state at edge i is state * exp(log_scale), up to the overall constant fixed
// by the initial vector.
std::vector<EdgeState> propagate_edges(const PotentialStack& stack,
                                       double energy);

}  // namespace detail
}  // namespace proxwell
