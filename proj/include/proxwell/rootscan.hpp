#pragma once

#include <functional>
#include <span>
#include <vector>

namespace proxwell {

struct RootScanOptions {
  // Bisection stops once the bracket width is <= rel_tol * max(1, |E|);
  // rel_tol = 0 refines until the bracket cannot shrink further in double
  // precision.
  double rel_tol = 1e-10;
  int max_iterations = 200;
  // Roots closer than this collapse to one.
  double dedup_tol = 1e-9;
  // Bisect brackets concurrently.
  bool parallel = false;
};

struct RefinedRoot {
  double value;
  double bracket_lo;
  double bracket_hi;
};

// Number of grid points used by default over [lo, hi]: 2000 per unit of
// width, never fewer than 2000.
int default_scan_grid(double lo, double hi);

// Brackets every sign change between consecutive grid values and bisects each
// to the requested tolerance. xs must be strictly increasing and fs must hold
// f evaluated at xs. Exact zeros on the grid become zero-width roots. Throws
// if a bracket fails to converge within the iteration cap.
std::vector<RefinedRoot> refine_sign_changes(
    const std::function<double(double)>& f, std::span<const double> xs,
    std::span<const double> fs, const RootScanOptions& options = {});

// Uniform scan of [lo, hi] with grid_points samples followed by refinement.
std::vector<RefinedRoot> scan_roots(const std::function<double(double)>& f,
                                    double lo, double hi, int grid_points,
                                    const RootScanOptions& options = {});

// Uniformly spaced grid including both endpoints.
std::vector<double> uniform_grid(double lo, double hi, int points);

}  // namespace proxwell
