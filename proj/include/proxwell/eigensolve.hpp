#pragma once

#include <optional>
#include <span>
#include <vector>

#include "proxwell/propagate.hpp"
#include "proxwell/stack.hpp"

namespace proxwell {

enum class Execution { serial, parallel };

// Energy interval scanned for eigenvalues. The default grid resolves 2000
// points per unit of window width, never fewer than 2000 in total; the
// closest root pair in the paper's configurations is ~1.9 apart in units of
// the grid step, so doubling the grid never changes the result.
struct EnergyWindow {
  double lo;
  double hi;
  int grid_points;

  EnergyWindow(double lo, double hi);
  EnergyWindow(double lo, double hi, int grid_points);
};

struct Eigenvalue {
  double energy;
  // Final bisection bracket; its width is <= 1e-10 * max(1, energy) and the
  // mismatch changes sign (or vanishes) across it.
  double bracket_lo;
  double bracket_hi;
  int node_count;
  bool proximity_valid;  // node-free, admissible as a gap function
  bool below_barrier;    // energy < max layer potential
};

// All eigenvalues in the window, in increasing order. The mismatch is scanned
// on a uniform grid inset by 1e-9 * max(1, |hi|) from both ends, each sign
// change is bisected until the bracket stops shrinking in double precision
// (always within the documented 1e-10 relative bound), and roots closer than
// 1e-9 are merged. Both execution modes produce bit-identical results.
std::vector<Eigenvalue> find_eigenvalues(const PotentialStack& stack,
                                         const EnergyWindow& window,
                                         Execution exec = Execution::parallel);

std::optional<Eigenvalue> lowest_eigenvalue(const PotentialStack& stack,
                                            const EnergyWindow& window,
                                            Execution exec = Execution::parallel);

// Smallest barrier height V for which the one-period Dirichlet bilayer has an
// eigenvalue below V, resolved to +/- tol by bisection on V. At the threshold
// the lowest root sits exactly at E = V (the q -> 0 limit of the one-period
// equation, tan(sqrt(V)) = -sqrt(V)).
double dirichlet_threshold(double tol);

namespace detail {

// Mismatch evaluated over an energy grid; serial reference and the
// OpenMP-parallel kernel it validates.
std::vector<double> mismatch_grid_serial(const PotentialStack& stack,
                                         std::span<const double> energies);
std::vector<double> mismatch_grid_parallel(const PotentialStack& stack,
                                           std::span<const double> energies);

}  // namespace detail
}  // namespace proxwell
