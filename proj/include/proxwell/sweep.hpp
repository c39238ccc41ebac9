#pragma once

#include <vector>

#include "proxwell/dispersion.hpp"
#include "proxwell/eigensolve.hpp"

namespace proxwell {

struct SweepRow {
  double v;
  double energy;
  Branch branch;
};

// Lowest eigenvalue of each closed-form branch at every barrier height on a
// uniform [v_min, v_max] grid with `steps` points: one-period Dirichlet
// (switching to its E > V continuation below the existence threshold),
// one-period Neumann, and the reduced two- and three-period equations. A
// branch with no root at some V emits no row there. Rows are ordered by V
// then branch regardless of the execution mode.
std::vector<SweepRow> sweep_branches(double v_min, double v_max, int steps,
                                     Execution exec = Execution::parallel);

}  // namespace proxwell
