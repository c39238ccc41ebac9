// Command-line front end: builds a potential stack from flags, runs the
// solver, and emits plot-ready CSV or JSON.
//
// Exit codes: 0 success, 1 computational failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "proxwell/emit.hpp"
#include "proxwell/sweep.hpp"
#include "proxwell/validate.hpp"
#include "proxwell/wavefunction.hpp"

namespace {

using namespace proxwell;

constexpr int kExitOk = 0;
constexpr int kExitComputeError = 1;
constexpr int kExitUsageError = 2;

struct StackOptions {
  int periods = 1;
  double barrier = 0.0;
  bool barrier_set = false;
  std::string bc_name;
  std::string layers_spec;
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot open output file: " + path);
    }
    file << text;
  }
};

void add_stack_flags(CLI::App* cmd, StackOptions& opts) {
  cmd->add_option("--periods", opts.periods, "Number of bilayer periods")
      ->capture_default_str();
  cmd->add_option("--v", opts.barrier, "Barrier potential in hbar^2/(2 m d^2)")
      ->each([&opts](const std::string&) { opts.barrier_set = true; });
  cmd->add_option("--bc", opts.bc_name, "End condition: dirichlet or neumann")
      ->required();
  cmd->add_option("--layers", opts.layers_spec,
                  "Hand-built stack as comma-separated potential:width pairs "
                  "(overrides --periods/--v)");
}

BoundaryCondition parse_bc(const std::string& name) {
  if (name == "dirichlet") {
    return BoundaryCondition::dirichlet;
  }
  if (name == "neumann") {
    return BoundaryCondition::neumann;
  }
  throw CLI::ValidationError("--bc", "expected 'dirichlet' or 'neumann', got '" + name + "'");
}

std::vector<Layer> parse_layers(const std::string& spec) {
  std::vector<Layer> layers;
  std::istringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw CLI::ValidationError("--layers", "expected potential:width pairs, got '" + item + "'");
    }
    try {
      const double potential = std::stod(item.substr(0, colon));
      const double width = std::stod(item.substr(colon + 1));
      layers.push_back({potential, width});
    } catch (const std::exception&) {
      throw CLI::ValidationError("--layers", "malformed pair '" + item + "'");
    }
  }
  if (layers.empty()) {
    throw CLI::ValidationError("--layers", "no layers given");
  }
  return layers;
}

PotentialStack build_stack(const StackOptions& opts) {
  const BoundaryCondition bc = parse_bc(opts.bc_name);
  if (!opts.layers_spec.empty()) {
    return PotentialStack(parse_layers(opts.layers_spec), bc, bc);
  }
  if (!opts.barrier_set) {
    throw CLI::ValidationError("--v", "either --v or --layers is required");
  }
  if (opts.periods < 1) {
    throw CLI::ValidationError("--periods", "must be >= 1");
  }
  if (opts.barrier < 0.0) {
    throw CLI::ValidationError("--v", "must be >= 0");
  }
  return make_periodic_bilayer(opts.periods, opts.barrier, bc);
}

// Default window is (0, V); both ends overridable. A stack whose maximum
// potential is zero has no sub-barrier window, so --window-hi is required.
EnergyWindow resolve_window(const PotentialStack& stack,
                            const std::optional<double>& lo,
                            const std::optional<double>& hi) {
  const double window_lo = lo.value_or(0.0);
  const double window_hi = hi.value_or(stack.max_potential());
  if (!(window_lo < window_hi)) {
    throw CLI::ValidationError(
        "--window-hi", "window (" + format_double(window_lo) + ", " +
                           format_double(window_hi) +
                           ") is empty; pass --window-hi above --window-lo");
  }
  return EnergyWindow(window_lo, window_hi);
}

int run_solve(const StackOptions& stack_opts, const OutputOptions& output,
              const std::optional<double>& lo, const std::optional<double>& hi) {
  const PotentialStack stack = build_stack(stack_opts);
  const EnergyWindow window = resolve_window(stack, lo, hi);
  const std::vector<Eigenvalue> eigenvalues = find_eigenvalues(stack, window);
  if (output.format == "json") {
    output.emit(solve_json(window, eigenvalues));
  } else {
    std::ostringstream text;
    write_solve_csv(text, window, eigenvalues);
    output.emit(text.str());
  }
  return kExitOk;
}

int run_wavefunction(const StackOptions& stack_opts, const OutputOptions& output,
                     const std::optional<double>& lo,
                     const std::optional<double>& hi, int index, int samples) {
  const PotentialStack stack = build_stack(stack_opts);
  const EnergyWindow window = resolve_window(stack, lo, hi);
  if (samples < 2) {
    throw CLI::ValidationError("--samples", "must be >= 2");
  }
  if (index < 0) {
    throw CLI::ValidationError("--index", "must be >= 0");
  }
  const std::vector<Eigenvalue> eigenvalues = find_eigenvalues(stack, window);
  if (static_cast<std::size_t>(index) >= eigenvalues.size()) {
    std::cerr << "proxwell: eigenvalue index " << index << " does not exist ("
              << eigenvalues.size() << " eigenvalue(s) in window)\n";
    return kExitComputeError;
  }
  const double energy = eigenvalues[static_cast<std::size_t>(index)].energy;
  const PiecewiseWavefunction wf = build_wavefunction(stack, energy);
  const std::vector<WavefunctionSample> rows = wf.sample(samples);
  if (output.format == "json") {
    output.emit(wavefunction_json(energy, rows));
  } else {
    std::ostringstream text;
    write_wavefunction_csv(text, energy, rows);
    output.emit(text.str());
  }
  return kExitOk;
}

int run_sweep(const OutputOptions& output, double v_min, double v_max, int steps) {
  if (!(v_min < v_max)) {
    throw CLI::ValidationError("--v-max", "requires --v-min < --v-max");
  }
  if (v_min < 0.0) {
    throw CLI::ValidationError("--v-min", "must be >= 0");
  }
  if (steps < 2) {
    throw CLI::ValidationError("--steps", "must be >= 2");
  }
  const std::vector<SweepRow> rows = sweep_branches(v_min, v_max, steps);
  if (output.format == "json") {
    output.emit(sweep_json(rows));
  } else {
    std::ostringstream text;
    write_sweep_csv(text, rows);
    output.emit(text.str());
  }
  return kExitOk;
}

int run_validate() {
  bool all_passed = true;
  for (const ValidationCheck& check : run_validation()) {
    std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name;
    if (!check.detail.empty()) {
      std::cout << " -- " << check.detail;
    }
    std::cout << '\n';
    all_passed = all_passed && check.passed;
  }
  return all_passed ? kExitOk : kExitComputeError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Eigensolver for piecewise-constant 1D potential stacks modeling "
      "superconducting proximity-effect multilayers"};
  app.require_subcommand(1);

  StackOptions stack_opts;
  OutputOptions output;
  std::optional<double> window_lo;
  std::optional<double> window_hi;
  int index = 0;
  int samples = 2001;
  double v_min = 0.25;
  double v_max = 20.0;
  int steps = 80;

  const auto add_output_flags = [&output](CLI::App* cmd) {
    cmd->add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", output.path, "Output path (default: stdout)");
  };
  const auto add_window_flags = [&](CLI::App* cmd) {
    cmd->add_option("--window-lo", window_lo, "Energy window lower edge (default 0)");
    cmd->add_option("--window-hi", window_hi,
                    "Energy window upper edge (default: max layer potential)");
  };

  CLI::App* solve = app.add_subcommand("solve", "Eigenvalue table for one stack");
  add_stack_flags(solve, stack_opts);
  add_window_flags(solve);
  add_output_flags(solve);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Energy-versus-potential curves for the closed-form branches");
  sweep->add_option("--v-min", v_min, "Lowest barrier height")->capture_default_str();
  sweep->add_option("--v-max", v_max, "Highest barrier height")->capture_default_str();
  sweep->add_option("--steps", steps, "Number of barrier heights")->capture_default_str();
  add_output_flags(sweep);

  CLI::App* wf = app.add_subcommand("wf", "Sampled eigenfunction for one eigenvalue");
  add_stack_flags(wf, stack_opts);
  add_window_flags(wf);
  wf->add_option("--index", index, "Eigenvalue index within the window")
      ->capture_default_str();
  wf->add_option("--samples", samples, "Sample count including endpoints")
      ->capture_default_str();
  add_output_flags(wf);

  CLI::App* validate = app.add_subcommand(
      "validate", "Cross-check the solver against the closed-form equations");
  (void)validate;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (solve->parsed()) {
      return run_solve(stack_opts, output, window_lo, window_hi);
    }
    if (sweep->parsed()) {
      return run_sweep(output, v_min, v_max, steps);
    }
    if (wf->parsed()) {
      return run_wavefunction(stack_opts, output, window_lo, window_hi, index, samples);
    }
    return run_validate();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "proxwell: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "proxwell: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "proxwell: " << e.what() << '\n';
    return kExitComputeError;
  }
}
