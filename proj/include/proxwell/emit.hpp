#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "proxwell/eigensolve.hpp"
#include "proxwell/sweep.hpp"
#include "proxwell/wavefunction.hpp"

namespace proxwell {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

// CSV emitters. Output is a pure function of the inputs, so identical inputs
// produce byte-identical text.
void write_solve_csv(std::ostream& out, const EnergyWindow& window,
                     const std::vector<Eigenvalue>& eigenvalues);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_wavefunction_csv(std::ostream& out, double energy,
                            const std::vector<WavefunctionSample>& samples);

// JSON emitters (serialized text, two-space indent, keys sorted). Parsing the
// output and re-serializing it reproduces the same bytes.
std::string solve_json(const EnergyWindow& window,
                       const std::vector<Eigenvalue>& eigenvalues);
std::string sweep_json(const std::vector<SweepRow>& rows);
std::string wavefunction_json(double energy,
                              const std::vector<WavefunctionSample>& samples);

}  // namespace proxwell
