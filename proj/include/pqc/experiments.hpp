#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pqc/gate.hpp"
#include "pqc/observable.hpp"

namespace pqc {

// Shared configuration for the experiment subcommands. Empty layers/seeds
// select the per-experiment defaults (effective_* resolve them).
struct ExperimentConfig {
  std::string experiment;  // fig3 | fig4 | gradvar | expressibility | spectrum
  std::vector<int> qubits = {2, 4, 6};
  std::vector<int> layers;
  int samples = 300;
  std::uint64_t seed = 42;
  OutputType output_type = OutputType::expectation;
  Axis axis = Axis::cycle;
  Entangler entangler = Entangler::brick;
  std::string output;  // empty writes to stdout
  std::string format = "csv";
  int workers = 0;  // 0 uses the hardware thread count
  int moment_samples = 5000;
  std::vector<std::uint64_t> seeds;  // expressibility; empty = seed..seed+4
  std::string template_path;         // spectrum only
  int grid = 0;                      // spectrum grid override; 0 = minimal

  void validate() const;
  std::vector<int> effective_layers() const;
  std::vector<std::uint64_t> effective_seeds() const;
};

// Overlays JSON fields (same names as the CLI flags; "template" and "M" are
// accepted for template_path and moment_samples) onto cfg. Unknown keys are
// refused.
void apply_config_json(ExperimentConfig& cfg, const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Formatted experiment output: an echo of the result-determining config
// fields, column names, string-formatted result rows, optional comment lines
// (fits), and skip reasons for infeasible cells. Worker count and output
// destination never appear, so records are byte-stable across pool sizes.
struct ExperimentRecord {
  std::vector<std::pair<std::string, std::string>> echo;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> comments;
  std::vector<std::string> skips;
  double wall_ms = 0.0;

  bool partial() const { return !skips.empty(); }
};

// Mean/variance of the coefficient power sum per (n, L) cell.
ExperimentRecord run_fig3(const ExperimentConfig& cfg);
// Median and max |c_k| per frequency at a single depth.
ExperimentRecord run_fig4(const ExperimentConfig& cfg);
// Parameter-shift gradient variance per (n, L) plus the decay-base fit.
ExperimentRecord run_gradvar(const ExperimentConfig& cfg);
// Two-copy expressibility per (n, L, seed) with a Haar-vs-Haar control row.
ExperimentRecord run_expressibility(const ExperimentConfig& cfg);
// Fourier coefficients of one sampled model.
ExperimentRecord run_spectrum(const ExperimentConfig& cfg);
// Dispatch on cfg.experiment.
ExperimentRecord run_experiment(const ExperimentConfig& cfg);

void write_csv(const ExperimentRecord& record, std::ostream& out);
void write_json(const ExperimentRecord& record, std::ostream& out);

// Minimal reader for the CSV the writers emit ('#' comments, one header
// line, comma-separated rows; cells never contain commas).
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(std::istream& in);

// Shortest round-trip decimal form.
std::string format_double(double v);

// Seed for an (n, L) cell, decorrelated across cells and stable under
// changes to the qubit/layer lists.
std::uint64_t cell_seed(std::uint64_t seed, int n, int L);

}  // namespace pqc
