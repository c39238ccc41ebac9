#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "proxwell/emit.hpp"

using namespace proxwell;

TEST_CASE("format_double round-trips every value exactly") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-30, 30);
  for (int trial = 0; trial < 5000; ++trial) {
    const double value = uniform(rng) * std::pow(10.0, exponent(rng));
    const std::string text = format_double(value);
    double parsed = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), parsed);
    REQUIRE(ec == std::errc());
    CHECK(parsed == value);
  }
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("solve CSV layout and the empty-window note") {
  const EnergyWindow window(0.0, 5.0);
  std::ostringstream empty;
  write_solve_csv(empty, window, {});
  CHECK(empty.str() ==
        "index,E,nodes,proximity_valid,below_barrier\n"
        "# no eigenvalues in window (0, 5)\n");

  std::ostringstream filled;
  write_solve_csv(filled, window,
                  {{4.375, 4.375, 4.375, 0, true, true},
                   {6.5, 6.5, 6.5, 1, false, false}});
  CHECK(filled.str() ==
        "index,E,nodes,proximity_valid,below_barrier\n"
        "0,4.375,0,true,true\n"
        "1,6.5,1,false,false\n");
}

TEST_CASE("sweep CSV layout") {
  std::ostringstream out;
  write_sweep_csv(out, {{5.0, 1.125, Branch::neumann_1p},
                        {5.0, 2.485, Branch::reduced_2p}});
  CHECK(out.str() ==
        "V,E,branch\n"
        "5,1.125,neumann_1p\n"
        "5,2.485,reduced_2p\n");
}

TEST_CASE("wavefunction CSV carries the eigenvalue comment") {
  std::ostringstream out;
  write_wavefunction_csv(out, 2.4674, {{0.0, 0.0, 1.5}, {2.0, 0.0, -1.5}});
  CHECK(out.str() ==
        "# E=2.4674\n"
        "x,psi,dpsi\n"
        "0,0,1.5\n"
        "2,0,-1.5\n");
}

TEST_CASE("identical inputs produce byte-identical CSV") {
  const std::vector<SweepRow> rows{{0.25, 0.118, Branch::neumann_1p},
                                   {0.25, 2.463, Branch::dirichlet_above_v}};
  std::ostringstream a, b;
  write_sweep_csv(a, rows);
  write_sweep_csv(b, rows);
  CHECK(a.str() == b.str());
}

TEST_CASE("JSON emissions parse and re-serialize to the same bytes") {
  const EnergyWindow window(0.0, 5.0);
  const std::vector<Eigenvalue> eigenvalues{{4.375151245882221, 4.375, 4.376, 0, true, true}};
  const std::string solve = solve_json(window, eigenvalues);
  CHECK(nlohmann::json::parse(solve).dump(2) + "\n" == solve);

  const std::string sweep =
      sweep_json({{5.0, 1.1242459961443827, Branch::neumann_1p}});
  CHECK(nlohmann::json::parse(sweep).dump(2) + "\n" == sweep);

  const std::string wave = wavefunction_json(
      2.4674011002723395, {{0.0, 0.0, 1.5707963267948966}});
  CHECK(nlohmann::json::parse(wave).dump(2) + "\n" == wave);

  // Values survive the round trip at full precision.
  const auto parsed = nlohmann::json::parse(solve);
  CHECK(parsed["eigenvalues"][0]["energy"].get<double>() == 4.375151245882221);
  CHECK(parsed["window"]["hi"].get<double>() == 5.0);
}
