#pragma once

#include <vector>

#include "proxwell/stack.hpp"

namespace proxwell {

enum class Normalization {
  l2_unit,   // integral of psi^2 over the stack equals 1
  max_unit,  // max |psi| equals 1
  raw,       // scale fixed by the unit initial vector at the left wall
};

struct WavefunctionSample {
  double x;
  double psi;
  double dpsi;
};

namespace detail {

// Local solution on one layer, written on the basis natural to the sign of
// E - V. log_scale is added to every exponent; it carries the propagation
// rescaling and the global normalization.
struct LayerForm {
  enum class Kind { oscillatory, evanescent, linear };
  Kind kind;
  double rate;  // k or q; unused for the linear form
  double c0;    // cos / e^{+qt} / constant coefficient
  double c1;    // sin / e^{-qt} / slope coefficient
  double log_scale;
};

}  // namespace detail

// Piecewise eigenfunction assembled from the propagated state at a given
// eigenvalue. Within each layer psi is the analytic cos/sin, cosh/sinh, or
// linear form; psi and dpsi are continuous across interfaces by construction.
class PiecewiseWavefunction {
 public:
  const PotentialStack& stack() const { return stack_; }
  double energy() const { return energy_; }
  Normalization normalization() const { return normalization_; }

  double psi(double x) const;
  double dpsi(double x) const;

  // Uniform grid over [0, total_width] including both endpoints. The samples
  // at the walls satisfy the end conditions exactly.
  std::vector<WavefunctionSample> sample(int n_samples) const;

  // Strict sign changes of psi on a grid of 1000 points per unit width,
  // ignoring samples with |psi| < 1e-12 * max |psi| (which also drops
  // Dirichlet endpoint zeros). Independent of the normalization mode.
  int count_nodes() const;

 private:
  friend PiecewiseWavefunction build_wavefunction(const PotentialStack&,
                                                  double, Normalization);

  PiecewiseWavefunction(PotentialStack stack, double energy, Normalization norm,
                        std::vector<detail::LayerForm> forms);

  void evaluate(std::size_t layer, double offset, double& psi_out,
                double& dpsi_out) const;

  PotentialStack stack_;
  double energy_;
  Normalization normalization_;
  std::vector<detail::LayerForm> forms_;
};

// Assembles the eigenfunction for `energy`, which must satisfy the right-wall
// condition to |mismatch| < 1e-6; throws std::invalid_argument otherwise.
PiecewiseWavefunction build_wavefunction(const PotentialStack& stack,
                                         double energy, Normalization norm);

// Default normalization: L2 for stacks with any hard wall, peak-normalized
// for pure Neumann stacks (a gap function has no physical normalization
// condition, so the peak is pinned instead).
PiecewiseWavefunction build_wavefunction(const PotentialStack& stack,
                                         double energy);

}  // namespace proxwell
