#include "proxwell/eigensolve.hpp"

#include <cmath>
#include <stdexcept>

#include "proxwell/rootscan.hpp"
#include "proxwell/wavefunction.hpp"

namespace proxwell {

namespace {

void validate_window(double lo, double hi, int grid_points) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("EnergyWindow: requires finite lo < hi");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("EnergyWindow: requires grid_points >= 2");
  }
}

Eigenvalue classify(const PotentialStack& stack, const RefinedRoot& root) {
  const PiecewiseWavefunction wf =
      build_wavefunction(stack, root.value, Normalization::max_unit);
  const int nodes = wf.count_nodes();
  return {root.value, root.bracket_lo, root.bracket_hi,
          nodes,      nodes == 0,      root.value < stack.max_potential()};
}

}  // namespace

EnergyWindow::EnergyWindow(double lo, double hi)
    : EnergyWindow(lo, hi, default_scan_grid(lo, hi)) {}

EnergyWindow::EnergyWindow(double lo, double hi, int grid_points)
    : lo(lo), hi(hi), grid_points(grid_points) {
  validate_window(lo, hi, grid_points);
}

namespace detail {

std::vector<double> mismatch_grid_serial(const PotentialStack& stack,
                                         std::span<const double> energies) {
  std::vector<double> values(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i) {
    values[i] = mismatch(stack, energies[i]).value;
  }
  return values;
}

std::vector<double> mismatch_grid_parallel(const PotentialStack& stack,
                                           std::span<const double> energies) {
  std::vector<double> values(energies.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(energies.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        mismatch(stack, energies[static_cast<std::size_t>(i)]).value;
  }
  return values;
}

}  // namespace detail

std::vector<Eigenvalue> find_eigenvalues(const PotentialStack& stack,
                                         const EnergyWindow& window,
                                         Execution exec) {
  // Inset keeps the scan off the trivial E = lo zero of the initial vector
  // and off the E = V branch point.
  const double inset = 1e-9 * std::max(1.0, std::abs(window.hi));
  const double lo = window.lo + inset;
  const double hi = window.hi - inset;
  if (!(lo < hi)) {
    return {};
  }
  const std::vector<double> xs = uniform_grid(lo, hi, window.grid_points);
  const std::vector<double> fs = exec == Execution::parallel
                                     ? detail::mismatch_grid_parallel(stack, xs)
                                     : detail::mismatch_grid_serial(stack, xs);
  RootScanOptions options;
  // Machine-limit refinement: per-layer rescaling can steepen the mismatch
  // near decaying multi-period roots by several orders of magnitude, and the
  // residual at the returned energy must stay small relative to that slope.
  options.rel_tol = 0.0;
  options.parallel = exec == Execution::parallel;
  const std::vector<RefinedRoot> roots = refine_sign_changes(
      [&stack](double energy) { return mismatch(stack, energy).value; }, xs, fs,
      options);

  std::vector<Eigenvalue> eigenvalues;
  eigenvalues.reserve(roots.size());
  for (const RefinedRoot& root : roots) {
    eigenvalues.push_back(classify(stack, root));
  }
  return eigenvalues;
}

std::optional<Eigenvalue> lowest_eigenvalue(const PotentialStack& stack,
                                            const EnergyWindow& window,
                                            Execution exec) {
  const std::vector<Eigenvalue> all = find_eigenvalues(stack, window, exec);
  if (all.empty()) {
    return std::nullopt;
  }
  return all.front();
}

double dirichlet_threshold(double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("dirichlet_threshold: requires tol > 0");
  }
  const auto has_bound_state = [](double barrier) {
    const PotentialStack stack =
        make_periodic_bilayer(1, barrier, BoundaryCondition::dirichlet);
    return !find_eigenvalues(stack, EnergyWindow(0.0, barrier)).empty();
  };
  // The onset sits between these: no bound state at V = 1, one at V = 8.
  double lo = 1.0;
  double hi = 8.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (has_bound_state(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace proxwell
