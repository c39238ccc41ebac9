#pragma once

#include <cstddef>
#include <vector>

namespace proxwell {

// End condition for the wavefunction at an outer wall. Dirichlet pins the
// value to zero (hard wall), Neumann pins the slope to zero (the metal/vacuum
// condition for a superconducting order parameter).
enum class BoundaryCondition { dirichlet, neumann };

// One constant-potential slab. Energies are in units of hbar^2/(2 m d^2) and
// lengths in units of the reference layer width d.
struct Layer {
  double potential = 0.0;
  double width = 1.0;
};

struct LayerLocation {
  std::size_t index = 0;
  double offset = 0.0;  // distance from the containing layer's left edge
};

// Immutable piecewise-constant potential on [0, total_width] with an end
// condition at each wall. Layer edges are the cumulative width sums starting
// at x = 0.
class PotentialStack {
 public:
  PotentialStack(std::vector<Layer> layers, BoundaryCondition left_bc,
                 BoundaryCondition right_bc);

  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t size() const { return layers_.size(); }
  BoundaryCondition left_bc() const { return left_bc_; }
  BoundaryCondition right_bc() const { return right_bc_; }
  double total_width() const { return edges_.back(); }
  double max_potential() const { return max_potential_; }

  // Left edge of layer i; edge(size()) is the right wall.
  double edge(std::size_t i) const { return edges_[i]; }

  // Layer containing x. Points on an interior edge belong to the layer on
  // the right; x = total_width belongs to the last layer. Rejects x outside
  // [0, total_width].
  LayerLocation locate(double x) const;

 private:
  std::vector<Layer> layers_;
  std::vector<double> edges_;
  BoundaryCondition left_bc_;
  BoundaryCondition right_bc_;
  double max_potential_;
};

// N-period bilayer of equal unit-width layers alternating between potential 0
// and `barrier`, with the same end condition at both walls. The zero-potential
// layers model the high-Tc material, the barrier layers the low-Tc one.
PotentialStack make_periodic_bilayer(int periods, double barrier,
                                     BoundaryCondition bc);

}  // namespace proxwell
