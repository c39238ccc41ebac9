#include "proxwell/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace proxwell {

namespace {

StateVector initial_state(BoundaryCondition bc) {
  return bc == BoundaryCondition::dirichlet ? StateVector{0.0, 1.0}
                                            : StateVector{1.0, 0.0};
}

void require_finite_energy(double energy) {
  if (!std::isfinite(energy)) {
    throw std::invalid_argument("trial energy must be finite");
  }
}

// cosh(x) stays below ~5e151 here, so products with the state cannot overflow
// before the next rescale.
constexpr double kFactorExponentCutoff = 350.0;

}  // namespace

namespace detail {

double advance(StateVector& state, const Layer& layer, double energy) {
  const double u = energy - layer.potential;
  const double w = layer.width;
  if (std::abs(u) <= kDegenerateTol * std::max(1.0, std::abs(layer.potential))) {
    state = {state.psi + w * state.dpsi, state.dpsi};
    return 0.0;
  }
  if (u > 0.0) {
    const double k = std::sqrt(u);
    const double c = std::cos(k * w);
    const double s = std::sin(k * w);
    state = {c * state.psi + (s / k) * state.dpsi,
             -k * s * state.psi + c * state.dpsi};
    return 0.0;
  }
  const double q = std::sqrt(-u);
  const double qw = q * w;
  if (qw <= kFactorExponentCutoff) {
    const double c = std::cosh(qw);
    const double s = std::sinh(qw);
    state = {c * state.psi + (s / q) * state.dpsi,
             q * s * state.psi + c * state.dpsi};
    return 0.0;
  }
  // Divide e^{qw} out of the hyperbolic matrix: cosh = e^{qw}(1 + e^{-2qw})/2.
  const double em = std::exp(-2.0 * qw);
  const double c = 0.5 * (1.0 + em);
  const double s = 0.5 * (1.0 - em);
  state = {c * state.psi + (s / q) * state.dpsi,
           q * s * state.psi + c * state.dpsi};
  return qw;
}

std::vector<EdgeState> propagate_edges(const PotentialStack& stack,
                                       double energy) {
  require_finite_energy(energy);
  std::vector<EdgeState> edges;
  edges.reserve(stack.size() + 1);
  StateVector state = initial_state(stack.left_bc());
  double log_scale = 0.0;
  edges.push_back({state, log_scale});
  for (const Layer& layer : stack.layers()) {
    log_scale += advance(state, layer, energy);
    const double norm = std::max(std::abs(state.psi), std::abs(state.dpsi));
    state.psi /= norm;
    state.dpsi /= norm;
    log_scale += std::log(norm);
    edges.push_back({state, log_scale});
  }
  return edges;
}

}  // namespace detail

LayerPropagator layer_propagator(const Layer& layer, double energy) {
  require_finite_energy(energy);
  const double u = energy - layer.potential;
  const double w = layer.width;
  if (std::abs(u) <= detail::kDegenerateTol * std::max(1.0, std::abs(layer.potential))) {
    return {1.0, w, 0.0, 1.0};
  }
  if (u > 0.0) {
    const double k = std::sqrt(u);
    const double c = std::cos(k * w);
    const double s = std::sin(k * w);
    return {c, s / k, -k * s, c};
  }
  const double q = std::sqrt(-u);
  const double c = std::cosh(q * w);
  const double s = std::sinh(q * w);
  return {c, s / q, q * s, c};
}

MismatchResult mismatch(const PotentialStack& stack, double energy) {
  require_finite_energy(energy);
  StateVector state = initial_state(stack.left_bc());
  double log_scale = 0.0;
  bool first = true;
  for (const Layer& layer : stack.layers()) {
    if (!first) {
      const double norm = std::max(std::abs(state.psi), std::abs(state.dpsi));
      state.psi /= norm;
      state.dpsi /= norm;
      log_scale += std::log(norm);
    }
    first = false;
    log_scale += detail::advance(state, layer, energy);
  }
  const double value =
      stack.right_bc() == BoundaryCondition::dirichlet ? state.psi : state.dpsi;
  return {value, log_scale};
}

std::vector<Sign> mismatch_sign_profile(const PotentialStack& stack,
                                        std::span<const double> energies) {
  for (std::size_t i = 1; i < energies.size(); ++i) {
    if (!(energies[i] > energies[i - 1])) {
      throw std::invalid_argument("mismatch_sign_profile: energies must be strictly increasing");
    }
  }
  std::vector<Sign> signs;
  signs.reserve(energies.size());
  for (double energy : energies) {
    const double v = mismatch(stack, energy).value;
    signs.push_back(v < 0.0 ? Sign::negative : (v > 0.0 ? Sign::positive : Sign::zero));
  }
  return signs;
}

}  // namespace proxwell
