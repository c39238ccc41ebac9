#pragma once

#include <string>
#include <vector>

#include "proxwell/eigensolve.hpp"

namespace proxwell {

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;  // offending (N, bc, V, E) tuples on failure
};

// Cross-validates the transfer-matrix solver against the closed-form
// dispersion relations on the paper's configurations and runs the associated
// property checks. All checks are deterministic.
std::vector<ValidationCheck> run_validation(Execution exec = Execution::parallel);

}  // namespace proxwell
