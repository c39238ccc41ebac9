#include "proxwell/validate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "proxwell/dispersion.hpp"
#include "proxwell/emit.hpp"
#include "proxwell/rootscan.hpp"

namespace proxwell {

namespace {

constexpr double kRootAgreementTol = 1e-8;
constexpr double kFactorResidualTol = 1e-10;

const char* bc_name(BoundaryCondition bc) {
  return bc == BoundaryCondition::dirichlet ? "dirichlet" : "neumann";
}

// Roots of a closed-form residual in (0, V), refined to machine precision.
std::vector<double> closed_form_roots(const std::function<double(double)>& f,
                                      double barrier) {
  const double inset = 1e-9 * std::max(1.0, barrier);
  RootScanOptions options;
  options.rel_tol = 0.0;
  std::vector<double> roots;
  for (const RefinedRoot& r :
       scan_roots(f, inset, barrier - inset,
                  default_scan_grid(0.0, barrier), options)) {
    roots.push_back(r.value);
  }
  return roots;
}

// Union of the one-period factor roots and (for N > 1) the reduced-equation
// roots: the closed-form eigenvalue set of the N-period stack in (0, V).
std::vector<double> dispersion_roots(int periods, BoundaryCondition bc,
                                     double barrier) {
  const auto one_period = bc == BoundaryCondition::dirichlet ? &u_dirichlet_1p
                                                             : &u_neumann_1p;
  std::vector<double> roots =
      closed_form_roots([&](double e) { return one_period(e, barrier); }, barrier);
  if (periods >= 2) {
    const auto reduced = periods == 2 ? &reduced_2p : &reduced_3p;
    for (double r : closed_form_roots(
             [&](double e) { return reduced(e, barrier); }, barrier)) {
      roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> deduped;
  for (double r : roots) {
    if (deduped.empty() || r - deduped.back() >= 1e-9) {
      deduped.push_back(r);
    }
  }
  return deduped;
}

ValidationCheck check_oracle_equivalence(Execution exec) {
  std::ostringstream bad;
  int compared = 0;
  for (int periods : {1, 2, 3}) {
    for (BoundaryCondition bc :
         {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
      for (double barrier : {2.0, 5.0, 10.0}) {
        const PotentialStack stack = make_periodic_bilayer(periods, barrier, bc);
        const std::vector<Eigenvalue> solved =
            find_eigenvalues(stack, EnergyWindow(0.0, barrier), exec);
        const std::vector<double> closed = dispersion_roots(periods, bc, barrier);
        ++compared;
        if (solved.size() != closed.size()) {
          bad << " (N=" << periods << ", " << bc_name(bc) << ", V=" << barrier
              << ": " << solved.size() << " solver roots vs " << closed.size()
              << " closed-form roots)";
          continue;
        }
        for (std::size_t i = 0; i < closed.size(); ++i) {
          if (std::abs(solved[i].energy - closed[i]) > kRootAgreementTol) {
            bad << " (N=" << periods << ", " << bc_name(bc) << ", V=" << barrier
                << ", E=" << format_double(solved[i].energy) << " vs "
                << format_double(closed[i]) << ")";
          }
        }
      }
    }
  }
  const std::string detail = bad.str();
  return {"solver roots match closed-form roots (N<=3, V in {2,5,10})",
          detail.empty(),
          detail.empty() ? std::to_string(compared) + " configurations compared"
                         : detail};
}

ValidationCheck check_factorization() {
  std::ostringstream bad;
  int checked = 0;
  for (double barrier : {4.5, 5.0, 10.0, 20.0}) {
    for (BoundaryCondition bc :
         {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
      const auto one_period = bc == BoundaryCondition::dirichlet
                                  ? &u_dirichlet_1p
                                  : &u_neumann_1p;
      for (double root : closed_form_roots(
               [&](double e) { return one_period(e, barrier); }, barrier)) {
        for (int periods : {2, 3}) {
          ++checked;
          const double residual = factored_full(root, barrier, periods, bc);
          // The non-vanishing reduced factor sets the product's scale (it
          // grows like e^{2q} with the barrier), so the bound is relative to
          // it; below scale 1 this is the plain absolute bound.
          const double scale = periods == 2 ? reduced_2p(root, barrier)
                                            : reduced_3p(root, barrier);
          if (!(std::abs(residual) <
                kFactorResidualTol * std::max(1.0, std::abs(scale)))) {
            bad << " (N=" << periods << ", " << bc_name(bc) << ", V=" << barrier
                << ", E=" << format_double(root) << ", residual="
                << format_double(residual) << ")";
          }
        }
      }
    }
  }
  const std::string detail = bad.str();
  return {"one-period roots solve the factorized multi-period equations",
          detail.empty(),
          detail.empty() ? std::to_string(checked) + " roots checked" : detail};
}

ValidationCheck check_neumann_n_independence(Execution exec) {
  std::ostringstream bad;
  for (double barrier : {2.0, 5.0, 10.0}) {
    double reference = 0.0;
    for (int periods : {1, 2, 3}) {
      const PotentialStack stack =
          make_periodic_bilayer(periods, barrier, BoundaryCondition::neumann);
      const auto lowest = lowest_eigenvalue(stack, EnergyWindow(0.0, barrier), exec);
      if (!lowest) {
        bad << " (N=" << periods << ", neumann, V=" << barrier << ": no root)";
        continue;
      }
      if (periods == 1) {
        reference = lowest->energy;
      } else if (std::abs(lowest->energy - reference) > kRootAgreementTol) {
        bad << " (N=" << periods << ", neumann, V=" << barrier
            << ", E=" << format_double(lowest->energy) << " vs N=1 E="
            << format_double(reference) << ")";
      }
    }
  }
  const std::string detail = bad.str();
  return {"lowest Neumann eigenvalue independent of period count", detail.empty(),
          detail.empty() ? "N in {1,2,3}, V in {2,5,10}" : detail};
}

ValidationCheck check_dirichlet_monotonic(Execution exec) {
  std::ostringstream bad;
  const double barrier = 5.0;
  double previous = 0.0;
  for (int periods : {1, 2, 3}) {
    const PotentialStack stack =
        make_periodic_bilayer(periods, barrier, BoundaryCondition::dirichlet);
    const auto lowest = lowest_eigenvalue(stack, EnergyWindow(0.0, barrier), exec);
    if (!lowest) {
      bad << " (N=" << periods << ", dirichlet, V=5: no root)";
      continue;
    }
    if (periods > 1 && !(lowest->energy < previous)) {
      bad << " (N=" << periods << ", dirichlet, V=5, E="
          << format_double(lowest->energy) << " not below "
          << format_double(previous) << ")";
    }
    previous = lowest->energy;
  }
  const std::string detail = bad.str();
  return {"lowest Dirichlet eigenvalue strictly decreasing in period count",
          detail.empty(), detail.empty() ? "N in {1,2,3}, V=5" : detail};
}

ValidationCheck check_bc_ordering(Execution exec) {
  std::ostringstream bad;
  for (double barrier : {1.0, 2.0, 4.0, 5.0, 10.0, 20.0}) {
    const PotentialStack neumann =
        make_periodic_bilayer(1, barrier, BoundaryCondition::neumann);
    const auto lowest_n = lowest_eigenvalue(neumann, EnergyWindow(0.0, barrier), exec);
    if (!lowest_n) {
      bad << " (N=1, neumann, V=" << barrier << ": no root)";
      continue;
    }
    // Below the existence threshold the Dirichlet branch continues above V.
    const PotentialStack dirichlet =
        make_periodic_bilayer(1, barrier, BoundaryCondition::dirichlet);
    const auto lowest_d =
        lowest_eigenvalue(dirichlet, EnergyWindow(0.0, barrier + 10.0), exec);
    if (!lowest_d) {
      bad << " (N=1, dirichlet, V=" << barrier << ": no root)";
      continue;
    }
    if (!(lowest_n->energy < lowest_d->energy)) {
      bad << " (V=" << barrier << ", neumann E=" << format_double(lowest_n->energy)
          << " not below dirichlet E=" << format_double(lowest_d->energy) << ")";
    }
  }
  const std::string detail = bad.str();
  return {"lowest Neumann eigenvalue below the Dirichlet one at every V",
          detail.empty(), detail.empty() ? "V in {1,2,4,5,10,20}" : detail};
}

ValidationCheck check_root_residuals(Execution exec) {
  std::ostringstream bad;
  int checked = 0;
  for (int periods : {1, 2, 3}) {
    for (BoundaryCondition bc :
         {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
      for (double barrier : {2.0, 5.0, 10.0}) {
        const PotentialStack stack = make_periodic_bilayer(periods, barrier, bc);
        for (const Eigenvalue& ev :
             find_eigenvalues(stack, EnergyWindow(0.0, barrier), exec)) {
          ++checked;
          const double residual = mismatch(stack, ev.energy).value;
          if (!(std::abs(residual) < 1e-8)) {
            bad << " (N=" << periods << ", " << bc_name(bc) << ", V=" << barrier
                << ", E=" << format_double(ev.energy) << ", residual="
                << format_double(residual) << ")";
          }
        }
      }
    }
  }
  const std::string detail = bad.str();
  return {"rescaled mismatch below 1e-8 at every reported eigenvalue",
          detail.empty(),
          detail.empty() ? std::to_string(checked) + " roots checked" : detail};
}

}  // namespace

std::vector<ValidationCheck> run_validation(Execution exec) {
  return {check_oracle_equivalence(exec), check_factorization(),
          check_neumann_n_independence(exec), check_dirichlet_monotonic(exec),
          check_bc_ordering(exec),          check_root_residuals(exec)};
}

}  // namespace proxwell
