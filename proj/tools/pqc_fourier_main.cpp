#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pqc/errors.hpp"
#include "pqc/experiments.hpp"
#include "pqc/gate.hpp"
#include "pqc/observable.hpp"
#include "pqc/version.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw pqc::ConfigError("bad " + what + " entry '" + item +
                             "' (expected an integer)");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text,
                                          const std::string& what) {
  std::vector<std::uint64_t> out;
  for (int v : parse_int_list(text, what)) {
    if (v < 0) throw pqc::ConfigError(what + " entries must be non-negative");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

// "5..50:5" (start..stop:step, step optional) or a comma list.
std::vector<int> parse_layer_spec(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) return parse_int_list(text, "layers");
  const std::size_t colon = text.find(':', dots + 2);
  const std::string first = text.substr(0, dots);
  const std::string last = text.substr(
      dots + 2, colon == std::string::npos ? colon : colon - dots - 2);
  const std::string step_text =
      colon == std::string::npos ? "1" : text.substr(colon + 1);
  int lo = 0, hi = 0, step = 0;
  try {
    lo = std::stoi(first);
    hi = std::stoi(last);
    step = std::stoi(step_text);
  } catch (const std::exception&) {
    throw pqc::ConfigError("bad layer range '" + text +
                           "' (expected START..STOP:STEP)");
  }
  if (step < 1 || hi < lo) {
    throw pqc::ConfigError("bad layer range '" + text +
                           "': need STOP >= START and STEP >= 1");
  }
  std::vector<int> out;
  for (int v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

struct FlagSet {
  std::string config, qubits, layers, output, format, output_type, axis,
      entangler, seeds, template_path;
  int samples = 0, workers = 0, moment_samples = 0, grid = 0;
  std::uint64_t seed = 0;
  CLI::Option* o_config = nullptr;
  CLI::Option* o_qubits = nullptr;
  CLI::Option* o_layers = nullptr;
  CLI::Option* o_samples = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_output = nullptr;
  CLI::Option* o_format = nullptr;
  CLI::Option* o_workers = nullptr;
  CLI::Option* o_output_type = nullptr;
  CLI::Option* o_axis = nullptr;
  CLI::Option* o_entangler = nullptr;
  CLI::Option* o_moment_samples = nullptr;
  CLI::Option* o_seeds = nullptr;
  CLI::Option* o_template = nullptr;
  CLI::Option* o_grid = nullptr;
};

void add_common_flags(CLI::App* sub, FlagSet& f) {
  f.o_config = sub->add_option("--config", f.config,
                               "JSON config file; flags override its fields");
  f.o_qubits = sub->add_option("--qubits", f.qubits,
                               "Comma-separated qubit counts (default 2,4,6)");
  f.o_layers = sub->add_option(
      "--layers", f.layers, "Depths: comma list or START..STOP:STEP range");
  f.o_samples = sub->add_option("--samples", f.samples,
                                "Parameter draws per cell (default 300)");
  f.o_seed = sub->add_option("--seed", f.seed, "Master seed (default 42)");
  f.o_output =
      sub->add_option("--output", f.output, "Output path (default stdout)");
  f.o_format =
      sub->add_option("--format", f.format, "csv or json (default csv)");
  f.o_workers = sub->add_option("--workers", f.workers,
                                "Worker threads; 0 = hardware count");
  f.o_output_type = sub->add_option(
      "--output-type", f.output_type,
      "expectation (all-Z) or probability (all-zeros projector)");
  f.o_axis = sub->add_option("--axis", f.axis,
                             "Rotation axis: x, y, z, or cycle (default)");
  f.o_entangler = sub->add_option(
      "--entangler", f.entangler, "chain, ring, or brick (default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fourier spectra and barren-plateau diagnostics for parameterized "
      "quantum circuits"};
  app.set_version_flag("--version", std::string(pqc::kVersion));
  app.require_subcommand(1);

  CLI::App* fig3 = app.add_subcommand(
      "fig3", "Mean and variance of the Fourier power sum per (n, L)");
  CLI::App* fig4 = app.add_subcommand(
      "fig4", "Median and max |c_k| per frequency at one depth");
  CLI::App* gradvar = app.add_subcommand(
      "gradvar", "Parameter-shift gradient variance and decay-base fit");
  CLI::App* expr = app.add_subcommand(
      "expressibility", "Two-copy expressibility per (n, L, seed)");
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Fourier coefficients of one sampled model");
  std::map<std::string, FlagSet> flag_sets;
  for (CLI::App* sub : {fig3, fig4, gradvar, expr, spectrum}) {
    add_common_flags(sub, flag_sets[sub->get_name()]);
  }
  {
    FlagSet& fe = flag_sets["expressibility"];
    fe.o_moment_samples = expr->add_option(
        "--moment-samples,--M", fe.moment_samples,
        "Draws per moment-matrix estimate (default 5000)");
    fe.o_seeds = expr->add_option(
        "--seeds", fe.seeds, "Comma-separated seeds (default seed..seed+4)");
    FlagSet& fs = flag_sets["spectrum"];
    fs.o_template = spectrum->add_option(
        "--template", fs.template_path,
        "Circuit template JSON; spectrum taken in its first data variable");
    fs.o_grid = spectrum->add_option(
        "--grid", fs.grid, "Evaluation grid size (0 = minimal 2R+1)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const FlagSet& f = flag_sets.at(app.get_subcommands().front()->get_name());
    pqc::ExperimentConfig cfg;
    if (f.o_config->count()) cfg = pqc::load_config(f.config);
    cfg.experiment = app.get_subcommands().front()->get_name();
    if (f.o_qubits->count()) cfg.qubits = parse_int_list(f.qubits, "qubits");
    if (f.o_layers->count()) cfg.layers = parse_layer_spec(f.layers);
    if (f.o_samples->count()) cfg.samples = f.samples;
    if (f.o_seed->count()) cfg.seed = f.seed;
    if (f.o_output->count()) cfg.output = f.output;
    if (f.o_format->count()) cfg.format = f.format;
    if (f.o_workers->count()) cfg.workers = f.workers;
    if (f.o_output_type->count()) {
      cfg.output_type = pqc::parse_output_type(f.output_type);
    }
    if (f.o_axis->count()) cfg.axis = pqc::parse_axis(f.axis);
    if (f.o_entangler->count()) {
      cfg.entangler = pqc::parse_entangler(f.entangler);
    }
    if (f.o_moment_samples && f.o_moment_samples->count()) {
      cfg.moment_samples = f.moment_samples;
    }
    if (f.o_seeds && f.o_seeds->count()) {
      cfg.seeds = parse_u64_list(f.seeds, "seeds");
    }
    if (f.o_template && f.o_template->count()) {
      cfg.template_path = f.template_path;
    }
    if (f.o_grid && f.o_grid->count()) cfg.grid = f.grid;
    cfg.validate();

    const pqc::ExperimentRecord record = pqc::run_experiment(cfg);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) {
        throw pqc::ConfigError("cannot open output file '" + cfg.output +
                               "'");
      }
      out = &file;
    }
    if (cfg.format == "json") {
      pqc::write_json(record, *out);
    } else {
      pqc::write_csv(record, *out);
    }
    return record.partial() ? 3 : 0;
  } catch (const pqc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
