#include "proxwell/dispersion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace proxwell {

namespace {

void require_finite(double energy, double barrier) {
  if (!std::isfinite(energy) || !std::isfinite(barrier)) {
    throw std::invalid_argument("dispersion: energy and barrier must be finite");
  }
}

void require_sub_barrier(double energy, double barrier, bool allow_zero) {
  require_finite(energy, barrier);
  if (allow_zero && energy == 0.0 && barrier >= 0.0) {
    return;
  }
  if (!(energy > 0.0) || !(energy < barrier)) {
    throw std::invalid_argument("dispersion: requires 0 < E < V, got E = " +
                                std::to_string(energy) + ", V = " +
                                std::to_string(barrier));
  }
}

}  // namespace

KQPair KQPair::from_energy(double energy, double barrier) {
  require_finite(energy, barrier);
  if (!(energy >= 0.0) || !(energy <= barrier)) {
    throw std::invalid_argument("KQPair: requires 0 <= E <= V");
  }
  return {std::sqrt(energy), std::sqrt(barrier - energy)};
}

std::string_view branch_name(Branch branch) {
  switch (branch) {
    case Branch::dirichlet_1p: return "dirichlet_1p";
    case Branch::neumann_1p: return "neumann_1p";
    case Branch::reduced_2p: return "reduced_2p";
    case Branch::reduced_3p: return "reduced_3p";
    case Branch::dirichlet_above_v: return "dirichlet_1p_above_v";
  }
  return "unknown";
}

double u_dirichlet_1p(double energy, double barrier) {
  require_sub_barrier(energy, barrier, /*allow_zero=*/false);
  const auto [k, q] = KQPair::from_energy(energy, barrier);
  return q * std::sin(k) * std::cosh(q) + k * std::cos(k) * std::sinh(q);
}

double u_neumann_1p(double energy, double barrier) {
  require_sub_barrier(energy, barrier, /*allow_zero=*/true);
  const auto [k, q] = KQPair::from_energy(energy, barrier);
  return q * std::sinh(q) * std::cos(k) - k * std::sin(k) * std::cosh(q);
}

double reduced_2p(double energy, double barrier) {
  require_sub_barrier(energy, barrier, /*allow_zero=*/false);
  const auto [k, q] = KQPair::from_energy(energy, barrier);
  return 2.0 * k * q * std::cos(k) * std::cosh(q) +
         (q * q - k * k) * std::sin(k) * std::sinh(q);
}

double reduced_3p(double energy, double barrier) {
  require_sub_barrier(energy, barrier, /*allow_zero=*/false);
  const auto [k, q] = KQPair::from_energy(energy, barrier);
  const double k2 = k * k;
  const double q2 = q * q;
  const double sk = std::sin(k);
  const double ck = std::cos(k);
  const double sq = std::sinh(q);
  const double cq = std::cosh(q);
  return (k2 * k2 - k2 * q2 + q2 * q2) * sk * sk * sq * sq +
         k2 * q2 * (3.0 * ck * ck * cq * cq + ck * ck * sq * sq - sk * sk * cq * cq) +
         4.0 * k * q * (q2 - k2) * sk * ck * sq * cq;
}

double dirichlet_above_v(double energy, double barrier) {
  require_finite(energy, barrier);
  if (!(barrier >= 0.0) || !(energy > barrier)) {
    throw std::invalid_argument("dirichlet_above_v: requires E > V >= 0");
  }
  const double k = std::sqrt(energy);
  const double qt = std::sqrt(energy - barrier);
  return qt * std::sin(k) * std::cos(qt) + k * std::cos(k) * std::sin(qt);
}

double factored_full(double energy, double barrier, int periods,
                     BoundaryCondition bc) {
  if (periods != 2 && periods != 3) {
    throw std::invalid_argument("factored_full: only 2 or 3 periods have closed forms");
  }
  const double reduced = periods == 2 ? reduced_2p(energy, barrier)
                                      : reduced_3p(energy, barrier);
  const double one_period = bc == BoundaryCondition::dirichlet
                                ? u_dirichlet_1p(energy, barrier)
                                : u_neumann_1p(energy, barrier);
  return reduced * one_period;
}

}  // namespace proxwell
