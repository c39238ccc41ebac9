// Compares the serial reference kernels against the OpenMP-parallel ones:
// the mismatch grid scan behind find_eigenvalues and the closed-form branch
// sweep. Results must agree bit for bit; only the wall time differs.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "proxwell/eigensolve.hpp"
#include "proxwell/rootscan.hpp"
#include "proxwell/sweep.hpp"

using namespace proxwell;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

template <typename F>
double timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return seconds_since(start);
}

bool identical(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, %d thread(s)\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both kernels run serially\n\n");
#endif

  // Mismatch grid scan: a three-period stack over a fine energy grid.
  const PotentialStack stack =
      make_periodic_bilayer(3, 5.0, BoundaryCondition::dirichlet);
  const std::vector<double> energies = uniform_grid(1e-9, 5.0 - 1e-9, 2'000'000);

  std::vector<double> serial_values, parallel_values;
  const double t_scan_serial =
      timed([&] { serial_values = detail::mismatch_grid_serial(stack, energies); });
  const double t_scan_parallel = timed(
      [&] { parallel_values = detail::mismatch_grid_parallel(stack, energies); });
  std::printf("mismatch grid, %zu points, 6-layer stack\n", energies.size());
  std::printf("  serial   %8.1f ms\n", 1e3 * t_scan_serial);
  std::printf("  parallel %8.1f ms   speedup %.2fx   results %s\n\n",
              1e3 * t_scan_parallel, t_scan_serial / t_scan_parallel,
              identical(serial_values, parallel_values) ? "identical" : "DIFFER");

  // Closed-form branch sweep over barrier heights.
  std::vector<SweepRow> serial_rows, parallel_rows;
  const double t_sweep_serial =
      timed([&] { serial_rows = sweep_branches(0.25, 20.0, 160, Execution::serial); });
  const double t_sweep_parallel = timed(
      [&] { parallel_rows = sweep_branches(0.25, 20.0, 160, Execution::parallel); });
  bool rows_equal = serial_rows.size() == parallel_rows.size();
  for (std::size_t i = 0; rows_equal && i < serial_rows.size(); ++i) {
    rows_equal = serial_rows[i].v == parallel_rows[i].v &&
                 serial_rows[i].energy == parallel_rows[i].energy &&
                 serial_rows[i].branch == parallel_rows[i].branch;
  }
  std::printf("branch sweep, 160 barrier heights, %zu rows\n", serial_rows.size());
  std::printf("  serial   %8.1f ms\n", 1e3 * t_sweep_serial);
  std::printf("  parallel %8.1f ms   speedup %.2fx   results %s\n",
              1e3 * t_sweep_parallel, t_sweep_serial / t_sweep_parallel,
              rows_equal ? "identical" : "DIFFER");

  return identical(serial_values, parallel_values) && rows_equal ? 0 : 1;
}
