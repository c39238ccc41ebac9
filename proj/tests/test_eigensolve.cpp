#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracle.hpp"
#include "proxwell/eigensolve.hpp"
#include "proxwell/rootscan.hpp"

using namespace proxwell;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> energies_of(const std::vector<Eigenvalue>& eigenvalues) {
  std::vector<double> out;
  out.reserve(eigenvalues.size());
  for (const Eigenvalue& ev : eigenvalues) {
    out.push_back(ev.energy);
  }
  return out;
}

}  // namespace

TEST_CASE("window validation") {
  CHECK_THROWS_AS(EnergyWindow(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EnergyWindow(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EnergyWindow(0.0, 1.0, 1), std::invalid_argument);
  const EnergyWindow w(0.0, 5.0);
  CHECK(w.grid_points == 10000);  // 2000 per unit width
  CHECK(EnergyWindow(0.0, 1e-3).grid_points == 2000);  // floor
}

TEST_CASE("one-period Dirichlet V=5 has exactly the reference eigenvalue") {
  const PotentialStack stack =
      make_periodic_bilayer(1, 5.0, BoundaryCondition::dirichlet);
  const auto found = find_eigenvalues(stack, EnergyWindow(0.0, 5.0));
  REQUIRE(found.size() == 1);
  CHECK(std::abs(found[0].energy - 4.38) < 0.01);
  CHECK(found[0].below_barrier);
  CHECK(found[0].node_count == 0);
  CHECK(found[0].proximity_valid);
}

TEST_CASE("below the threshold the Dirichlet well is empty") {
  const PotentialStack stack =
      make_periodic_bilayer(1, 4.0, BoundaryCondition::dirichlet);
  CHECK(find_eigenvalues(stack, EnergyWindow(0.0, 4.0)).empty());
  CHECK(!lowest_eigenvalue(stack, EnergyWindow(0.0, 4.0)).has_value());
}

TEST_CASE("two-period Dirichlet V=5 adds the reduced root below the shared one") {
  const PotentialStack stack =
      make_periodic_bilayer(2, 5.0, BoundaryCondition::dirichlet);
  const auto found = find_eigenvalues(stack, EnergyWindow(0.0, 5.0));
  REQUIRE(found.size() == 2);
  CHECK(std::abs(found[0].energy - 2.48) < 0.01);
  CHECK(std::abs(found[1].energy - 4.38) < 0.01);
}

TEST_CASE("three-period lowest eigenvalues match the reference values") {
  const PotentialStack dirichlet =
      make_periodic_bilayer(3, 5.0, BoundaryCondition::dirichlet);
  const auto lowest_d = lowest_eigenvalue(dirichlet, EnergyWindow(0.0, 5.0));
  REQUIRE(lowest_d.has_value());
  CHECK(std::abs(lowest_d->energy - 2.22) < 0.01);

  const PotentialStack neumann =
      make_periodic_bilayer(3, 2.0, BoundaryCondition::neumann);
  const auto lowest_n = lowest_eigenvalue(neumann, EnergyWindow(0.0, 2.0));
  REQUIRE(lowest_n.has_value());
  CHECK(std::abs(lowest_n->energy - 0.70) < 0.01);
}

TEST_CASE("zero barrier recovers the infinite-well ground state") {
  const PotentialStack stack =
      make_periodic_bilayer(1, 0.0, BoundaryCondition::dirichlet);
  const auto lowest = lowest_eigenvalue(stack, EnergyWindow(0.0, 12.0));
  REQUIRE(lowest.has_value());
  CHECK(std::abs(lowest->energy - kPi * kPi / 4.0) < 1e-8);
}

TEST_CASE("widened windows expose the above-barrier states") {
  const PotentialStack stack =
      make_periodic_bilayer(1, 5.0, BoundaryCondition::dirichlet);
  const auto found = find_eigenvalues(stack, EnergyWindow(0.0, 16.0));
  REQUIRE(found.size() >= 2);
  CHECK(std::abs(found[0].energy - 4.375151) < 1e-4);
  CHECK(found[0].below_barrier);
  for (std::size_t i = 1; i < found.size(); ++i) {
    CHECK(!found[i].below_barrier);
  }
  // The above-barrier continuation obeys the closed form too.
  const auto above = oracle::find_roots(
      [](double e) { return oracle::dirichlet_above_v(e, 5.0); }, 5.0 + 1e-9, 16.0);
  REQUIRE(above.size() == found.size() - 1);
  for (std::size_t i = 0; i < above.size(); ++i) {
    CHECK(std::abs(found[i + 1].energy - above[i]) < 1e-8);
  }
}

TEST_CASE("eigenvalues come out sorted with sign-changing brackets") {
  for (int periods : {1, 2, 3}) {
    for (BoundaryCondition bc :
         {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
      const PotentialStack stack = make_periodic_bilayer(periods, 10.0, bc);
      const auto found = find_eigenvalues(stack, EnergyWindow(0.0, 10.0));
      for (std::size_t i = 0; i < found.size(); ++i) {
        if (i > 0) {
          CHECK(found[i].energy > found[i - 1].energy);
        }
        CHECK(found[i].bracket_hi - found[i].bracket_lo <=
              1e-10 * std::max(1.0, found[i].energy));
        const double f_lo = mismatch(stack, found[i].bracket_lo).value;
        const double f_hi = mismatch(stack, found[i].bracket_hi).value;
        CHECK(f_lo * f_hi <= 0.0);
      }
    }
  }
}

TEST_CASE("lowest Neumann eigenvalue does not move with the period count") {
  for (double v : {2.0, 5.0, 10.0}) {
    const PotentialStack reference =
        make_periodic_bilayer(1, v, BoundaryCondition::neumann);
    const auto base = lowest_eigenvalue(reference, EnergyWindow(0.0, v));
    REQUIRE(base.has_value());
    for (int periods : {2, 3}) {
      const PotentialStack stack =
          make_periodic_bilayer(periods, v, BoundaryCondition::neumann);
      const auto lowest = lowest_eigenvalue(stack, EnergyWindow(0.0, v));
      REQUIRE(lowest.has_value());
      CHECK(std::abs(lowest->energy - base->energy) < 1e-8);
    }
  }
  // Beyond the closed forms: spot checks at four and five periods.
  const PotentialStack reference =
      make_periodic_bilayer(1, 5.0, BoundaryCondition::neumann);
  const double base = lowest_eigenvalue(reference, EnergyWindow(0.0, 5.0))->energy;
  for (int periods : {4, 5}) {
    const PotentialStack stack =
        make_periodic_bilayer(periods, 5.0, BoundaryCondition::neumann);
    const auto lowest = lowest_eigenvalue(stack, EnergyWindow(0.0, 5.0));
    REQUIRE(lowest.has_value());
    CHECK(std::abs(lowest->energy - base) < 1e-8);
  }
}

TEST_CASE("lowest Dirichlet eigenvalue strictly decreases with periods") {
  double previous = 0.0;
  for (int periods : {1, 2, 3}) {
    const PotentialStack stack =
        make_periodic_bilayer(periods, 5.0, BoundaryCondition::dirichlet);
    const auto lowest = lowest_eigenvalue(stack, EnergyWindow(0.0, 5.0));
    REQUIRE(lowest.has_value());
    if (periods > 1) {
      CHECK(lowest->energy < previous);
    }
    previous = lowest->energy;
  }
}

TEST_CASE("lowest Neumann eigenvalue sits below the Dirichlet one") {
  for (double v : {1.0, 3.0, 5.0, 10.0, 20.0}) {
    const auto neumann = lowest_eigenvalue(
        make_periodic_bilayer(1, v, BoundaryCondition::neumann),
        EnergyWindow(0.0, v));
    const auto dirichlet = lowest_eigenvalue(
        make_periodic_bilayer(1, v, BoundaryCondition::dirichlet),
        EnergyWindow(0.0, v + 10.0));  // covers the E > V continuation
    REQUIRE(neumann.has_value());
    REQUIRE(dirichlet.has_value());
    CHECK(neumann->energy < dirichlet->energy);
  }
}

TEST_CASE("raising the barrier never lowers the ground state") {
  for (BoundaryCondition bc :
       {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
    double previous = -1.0;
    for (double v : {0.5, 1.0, 2.0, 4.0, 5.0, 7.0, 10.0, 15.0, 20.0}) {
      const auto lowest =
          lowest_eigenvalue(make_periodic_bilayer(2, v, bc),
                            EnergyWindow(0.0, v + 10.0));
      REQUIRE(lowest.has_value());
      CHECK(lowest->energy >= previous);
      previous = lowest->energy;
    }
  }
}

TEST_CASE("the V -> infinity Dirichlet limit approaches pi^2") {
  const PotentialStack stack =
      make_periodic_bilayer(1, 1e6, BoundaryCondition::dirichlet);
  const auto lowest = lowest_eigenvalue(stack, EnergyWindow(0.0, 12.0));
  REQUIRE(lowest.has_value());
  CHECK(std::abs(lowest->energy - kPi * kPi) / (kPi * kPi) < 0.01);
}

TEST_CASE("the Neumann ground state collapses with the barrier") {
  const PotentialStack stack =
      make_periodic_bilayer(1, 1e-3, BoundaryCondition::neumann);
  const auto lowest = lowest_eigenvalue(stack, EnergyWindow(0.0, 1e-3));
  REQUIRE(lowest.has_value());
  CHECK(lowest->energy < 1e-3);
  CHECK(lowest->energy == doctest::Approx(5e-4).epsilon(0.01));
}

TEST_CASE("doubling the grid changes nothing on the paper configurations") {
  for (int periods : {1, 2, 3}) {
    for (BoundaryCondition bc :
         {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
      for (double v : {2.0, 5.0}) {
        const PotentialStack stack = make_periodic_bilayer(periods, v, bc);
        const EnergyWindow coarse(0.0, v);
        const EnergyWindow fine(0.0, v, 2 * coarse.grid_points);
        const auto a = energies_of(find_eigenvalues(stack, coarse));
        const auto b = energies_of(find_eigenvalues(stack, fine));
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          CHECK(std::abs(a[i] - b[i]) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("serial and parallel scans agree bit for bit") {
  const PotentialStack stack =
      make_periodic_bilayer(3, 10.0, BoundaryCondition::neumann);
  const EnergyWindow window(0.0, 10.0);
  const auto serial = find_eigenvalues(stack, window, Execution::serial);
  const auto parallel = find_eigenvalues(stack, window, Execution::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].energy == parallel[i].energy);
    CHECK(serial[i].bracket_lo == parallel[i].bracket_lo);
    CHECK(serial[i].bracket_hi == parallel[i].bracket_hi);
    CHECK(serial[i].node_count == parallel[i].node_count);
  }
  const auto grid = uniform_grid(1e-9, 10.0 - 1e-9, 5000);
  CHECK(detail::mismatch_grid_serial(stack, grid) ==
        detail::mismatch_grid_parallel(stack, grid));
}

TEST_CASE("scaling the stack rescales the spectrum by 1/s^2") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> potential(0.0, 8.0);
  std::uniform_real_distribution<double> width(0.5, 2.0);
  std::uniform_real_distribution<double> scale_dist(0.4, 2.5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Layer> layers;
    const int n_layers = 2 + static_cast<int>(rng() % 3);
    double v_max = 0.0;
    for (int i = 0; i < n_layers; ++i) {
      layers.push_back({potential(rng), width(rng)});
      v_max = std::max(v_max, layers.back().potential);
    }
    if (v_max < 1.0) {
      continue;
    }
    const BoundaryCondition bc = trial % 2 == 0 ? BoundaryCondition::dirichlet
                                                : BoundaryCondition::neumann;
    const PotentialStack stack(layers, bc, bc);

    const double s = scale_dist(rng);
    std::vector<Layer> scaled_layers;
    for (const Layer& layer : layers) {
      scaled_layers.push_back({layer.potential / (s * s), layer.width * s});
    }
    const PotentialStack scaled(scaled_layers, bc, bc);

    const auto base = energies_of(
        find_eigenvalues(stack, EnergyWindow(0.0, v_max)));
    const auto moved = energies_of(
        find_eigenvalues(scaled, EnergyWindow(0.0, v_max / (s * s))));
    REQUIRE(base.size() == moved.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(std::abs(moved[i] * s * s - base[i]) < 1e-8);
    }
  }
}

TEST_CASE("threshold: bound states appear at V = 4.12") {
  const double coarse = dirichlet_threshold(0.02);
  CHECK(std::abs(coarse - 4.12) <= 0.02);

  const double fine = dirichlet_threshold(1e-6);
  // Independent route: the q -> 0 limit of the one-period equation is
  // tan(x) = -x with x = sqrt(V); its first positive root fixes V*.
  const auto limit_roots = oracle::find_roots(
      [](double x) { return std::sin(x) + x * std::cos(x); }, kPi / 2.0 + 1e-9,
      kPi - 1e-9);
  REQUIRE(limit_roots.size() == 1);
  const double expected = limit_roots[0] * limit_roots[0];
  CHECK(std::abs(fine - expected) < 1e-4);
  CHECK(std::abs(fine - 4.12) < 0.02);

  // Consistency on both sides of the threshold.
  const PotentialStack above =
      make_periodic_bilayer(1, fine + 0.01, BoundaryCondition::dirichlet);
  CHECK(find_eigenvalues(above, EnergyWindow(0.0, fine + 0.01)).size() == 1);
  const PotentialStack below =
      make_periodic_bilayer(1, fine - 0.01, BoundaryCondition::dirichlet);
  CHECK(find_eigenvalues(below, EnergyWindow(0.0, fine - 0.01)).empty());

  CHECK_THROWS_AS(dirichlet_threshold(0.0), std::invalid_argument);
}

TEST_CASE("mixed walls: a hard/free uniform well has E = ((n + 1/2) pi)^2") {
  const PotentialStack stack({{0.0, 1.0}}, BoundaryCondition::dirichlet,
                             BoundaryCondition::neumann);
  const auto found = find_eigenvalues(stack, EnergyWindow(0.0, 30.0));
  REQUIRE(found.size() == 2);
  CHECK(std::abs(found[0].energy - kPi * kPi / 4.0) < 1e-9);
  CHECK(std::abs(found[1].energy - 9.0 * kPi * kPi / 4.0) < 1e-8);
  CHECK(found[0].node_count == 0);
  CHECK(found[1].node_count == 1);
}

TEST_CASE("eigenvalues match the independent closed-form roots") {
  for (int periods : {1, 2, 3}) {
    for (BoundaryCondition bc :
         {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
      for (double v : {2.0, 5.0, 10.0}) {
        const PotentialStack stack = make_periodic_bilayer(periods, v, bc);
        const auto solved =
            energies_of(find_eigenvalues(stack, EnergyWindow(0.0, v)));

        std::vector<double> expected = oracle::find_roots(
            [&](double e) {
              return bc == BoundaryCondition::dirichlet ? oracle::u_d1(e, v)
                                                        : oracle::u_n1(e, v);
            },
            1e-9, v - 1e-9);
        if (periods >= 2) {
          const auto reduced = oracle::find_roots(
              [&](double e) {
                return periods == 2 ? oracle::reduced_2p(e, v)
                                    : oracle::reduced_3p(e, v);
              },
              1e-9, v - 1e-9);
          expected.insert(expected.end(), reduced.begin(), reduced.end());
          std::sort(expected.begin(), expected.end());
        }

        REQUIRE(solved.size() == expected.size());
        for (std::size_t i = 0; i < solved.size(); ++i) {
          CHECK(std::abs(solved[i] - expected[i]) < 1e-8);
        }
      }
    }
  }
}
