#include "proxwell/sweep.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

#include "proxwell/rootscan.hpp"

namespace proxwell {

namespace {

std::optional<double> lowest_root(const std::function<double(double)>& f,
                                  double lo, double hi) {
  if (!(lo < hi)) {
    return std::nullopt;
  }
  const auto roots = scan_roots(f, lo, hi, default_scan_grid(lo, hi));
  if (roots.empty()) {
    return std::nullopt;
  }
  return roots.front().value;
}

std::vector<SweepRow> rows_at(double v) {
  std::vector<SweepRow> rows;
  const double inset = 1e-9 * std::max(1.0, v);

  const auto in_well = [&](double (*residual)(double, double)) {
    return lowest_root([&](double e) { return residual(e, v); }, inset, v - inset);
  };

  if (const auto e = in_well(&u_dirichlet_1p)) {
    rows.push_back({v, *e, Branch::dirichlet_1p});
  } else if (const auto above = lowest_root(
                 [&](double e) { return dirichlet_above_v(e, v); }, v + inset,
                 v + 10.0)) {
    rows.push_back({v, *above, Branch::dirichlet_above_v});
  }
  if (const auto e = in_well(&u_neumann_1p)) {
    rows.push_back({v, *e, Branch::neumann_1p});
  }
  if (const auto e = in_well(&reduced_2p)) {
    rows.push_back({v, *e, Branch::reduced_2p});
  }
  if (const auto e = in_well(&reduced_3p)) {
    rows.push_back({v, *e, Branch::reduced_3p});
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> sweep_branches(double v_min, double v_max, int steps,
                                     Execution exec) {
  if (!std::isfinite(v_min) || !std::isfinite(v_max) || !(v_min < v_max)) {
    throw std::invalid_argument("sweep_branches: requires finite v_min < v_max");
  }
  if (!(v_min >= 0.0)) {
    throw std::invalid_argument("sweep_branches: requires v_min >= 0");
  }
  if (steps < 2) {
    throw std::invalid_argument("sweep_branches: requires steps >= 2");
  }

  std::vector<std::vector<SweepRow>> per_v(static_cast<std::size_t>(steps));
  const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < steps; ++i) {
    const double v = v_min + (v_max - v_min) * i / (steps - 1);
    per_v[static_cast<std::size_t>(i)] = rows_at(v);
  }

  std::vector<SweepRow> rows;
  for (const std::vector<SweepRow>& chunk : per_v) {
    rows.insert(rows.end(), chunk.begin(), chunk.end());
  }
  return rows;
}

}  // namespace proxwell
