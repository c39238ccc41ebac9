#include "proxwell/rootscan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace proxwell {

namespace {

struct Bracket {
  double lo, hi;
  double f_lo;
};

bool converged(double lo, double hi, double rel_tol) {
  const double mid = 0.5 * (lo + hi);
  if (hi - lo <= rel_tol * std::max(1.0, std::abs(mid))) {
    return true;
  }
  // Machine limit: the midpoint no longer separates the endpoints.
  return mid <= lo || mid >= hi;
}

RefinedRoot bisect(const std::function<double(double)>& f, Bracket bracket,
                   const RootScanOptions& options) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  const bool lo_negative = bracket.f_lo < 0.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    if (converged(lo, hi, options.rel_tol)) {
      return {0.5 * (lo + hi), lo, hi};
    }
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) {
      return {mid, mid, mid};
    }
    if ((fm < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (converged(lo, hi, options.rel_tol)) {
    return {0.5 * (lo + hi), lo, hi};
  }
  throw std::runtime_error("rootscan: bisection did not converge in " +
                           std::to_string(options.max_iterations) +
                           " iterations on bracket [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
}

}  // namespace

int default_scan_grid(double lo, double hi) {
  const double per_unit = std::ceil(2000.0 * (hi - lo));
  const double capped = std::min(per_unit, 2.0e9);
  return static_cast<int>(std::max(2000.0, capped));
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2) {
    throw std::invalid_argument("uniform_grid: need at least 2 points");
  }
  std::vector<double> xs(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  }
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

std::vector<RefinedRoot> refine_sign_changes(
    const std::function<double(double)>& f, std::span<const double> xs,
    std::span<const double> fs, const RootScanOptions& options) {
  if (xs.size() != fs.size()) {
    throw std::invalid_argument("refine_sign_changes: xs and fs sizes differ");
  }
  std::vector<RefinedRoot> roots;
  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (fs[i] == 0.0) {
      roots.push_back({xs[i], xs[i], xs[i]});
      continue;
    }
    if (i == 0 || fs[i - 1] == 0.0) {
      continue;
    }
    if ((fs[i - 1] < 0.0) != (fs[i] < 0.0)) {
      brackets.push_back({xs[i - 1], xs[i], fs[i - 1]});
    }
  }

  std::vector<RefinedRoot> refined(brackets.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(brackets.size()); ++b) {
    try {
      refined[static_cast<std::size_t>(b)] =
          bisect(f, brackets[static_cast<std::size_t>(b)], options);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  roots.insert(roots.end(), refined.begin(), refined.end());
  std::sort(roots.begin(), roots.end(),
            [](const RefinedRoot& a, const RefinedRoot& b) { return a.value < b.value; });
  std::vector<RefinedRoot> deduped;
  for (const RefinedRoot& r : roots) {
    if (!deduped.empty() && r.value - deduped.back().value < options.dedup_tol) {
      continue;
    }
    deduped.push_back(r);
  }
  return deduped;
}

std::vector<RefinedRoot> scan_roots(const std::function<double(double)>& f,
                                    double lo, double hi, int grid_points,
                                    const RootScanOptions& options) {
  if (!(lo < hi)) {
    throw std::invalid_argument("scan_roots: requires lo < hi");
  }
  const std::vector<double> xs = uniform_grid(lo, hi, grid_points);
  std::vector<double> fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fs[i] = f(xs[i]);
  }
  return refine_sign_changes(f, xs, fs, options);
}

}  // namespace proxwell
