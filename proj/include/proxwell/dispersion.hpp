#pragma once

#include <string_view>

#include "proxwell/stack.hpp"

namespace proxwell {

// Sub-barrier wavenumber pair: k = sqrt(E) in the wells, q = sqrt(V - E) in
// the barriers, so k^2 + q^2 = V.
struct KQPair {
  double k;
  double q;
  static KQPair from_energy(double energy, double barrier);
};

// Curve labels for the energy-versus-barrier sweep.
enum class Branch {
  dirichlet_1p,
  neumann_1p,
  reduced_2p,
  reduced_3p,
  dirichlet_above_v,  // oscillatory-in-both-layers continuation, E > V
};

std::string_view branch_name(Branch branch);

// Closed-form eigenvalue residuals for N-period equal-width bilayers with
// unit layer width. Each residual is the tan/tanh eigenvalue condition
// multiplied through by cos(k)cosh(q) -- cos^2(k)cosh^2(q) for the
// three-period equation -- which removes the tan poles without moving any
// zero. Zeros of the residual are eigenvalues.

// One period, hard walls: q tan(k) + k tanh(q) = 0, for 0 < E < V.
double u_dirichlet_1p(double energy, double barrier);

// One period, zero-slope walls: k tan(k) = q tanh(q), for 0 <= E < V.
double u_neumann_1p(double energy, double barrier);

// Two periods with the one-period factor removed (either end condition):
// 2kq + (q^2 - k^2) tan(k) tanh(q) = 0, for 0 < E < V.
double reduced_2p(double energy, double barrier);

// Three periods with the one-period factor removed, for 0 < E < V.
double reduced_3p(double energy, double barrier);

// Hard walls with E > V >= 0: both layers oscillatory, qt = sqrt(E - V),
// q_t tan(k) + k tan(q_t) = 0. At V = 0 this reduces to sqrt(E) sin(2 sqrt(E)).
double dirichlet_above_v(double energy, double barrier);

// Full factorized equation for 2 or 3 periods: the reduced residual times the
// matching one-period factor. Every one-period root is therefore a root of
// the multi-period equation.
double factored_full(double energy, double barrier, int periods,
                     BoundaryCondition bc);

}  // namespace proxwell
