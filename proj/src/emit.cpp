#include "proxwell/emit.hpp"

#include <array>
#include <charconv>
#include <ostream>

#include "json.hpp"

namespace proxwell {

namespace {

const char* bool_name(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buffer;
  const auto [end, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

void write_solve_csv(std::ostream& out, const EnergyWindow& window,
                     const std::vector<Eigenvalue>& eigenvalues) {
  out << "index,E,nodes,proximity_valid,below_barrier\n";
  if (eigenvalues.empty()) {
    out << "# no eigenvalues in window (" << format_double(window.lo) << ", "
        << format_double(window.hi) << ")\n";
    return;
  }
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    const Eigenvalue& ev = eigenvalues[i];
    out << i << ',' << format_double(ev.energy) << ',' << ev.node_count << ','
        << bool_name(ev.proximity_valid) << ',' << bool_name(ev.below_barrier)
        << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "V,E,branch\n";
  for (const SweepRow& row : rows) {
    out << format_double(row.v) << ',' << format_double(row.energy) << ','
        << branch_name(row.branch) << '\n';
  }
}

void write_wavefunction_csv(std::ostream& out, double energy,
                            const std::vector<WavefunctionSample>& samples) {
  out << "# E=" << format_double(energy) << '\n';
  out << "x,psi,dpsi\n";
  for (const WavefunctionSample& s : samples) {
    out << format_double(s.x) << ',' << format_double(s.psi) << ','
        << format_double(s.dpsi) << '\n';
  }
}

std::string solve_json(const EnergyWindow& window,
                       const std::vector<Eigenvalue>& eigenvalues) {
  nlohmann::json j;
  j["command"] = "solve";
  j["window"] = {{"lo", window.lo}, {"hi", window.hi}};
  j["eigenvalues"] = nlohmann::json::array();
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    const Eigenvalue& ev = eigenvalues[i];
    j["eigenvalues"].push_back({{"index", i},
                                {"energy", ev.energy},
                                {"nodes", ev.node_count},
                                {"proximity_valid", ev.proximity_valid},
                                {"below_barrier", ev.below_barrier}});
  }
  return j.dump(2) + "\n";
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json j;
  j["command"] = "sweep";
  j["rows"] = nlohmann::json::array();
  for (const SweepRow& row : rows) {
    j["rows"].push_back({{"V", row.v},
                         {"E", row.energy},
                         {"branch", std::string(branch_name(row.branch))}});
  }
  return j.dump(2) + "\n";
}

std::string wavefunction_json(double energy,
                              const std::vector<WavefunctionSample>& samples) {
  nlohmann::json j;
  j["command"] = "wavefunction";
  j["energy"] = energy;
  j["samples"] = nlohmann::json::array();
  for (const WavefunctionSample& s : samples) {
    j["samples"].push_back({{"x", s.x}, {"psi", s.psi}, {"dpsi", s.dpsi}});
  }
  return j.dump(2) + "\n";
}

}  // namespace proxwell
