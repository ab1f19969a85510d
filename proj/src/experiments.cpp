#include "pqc/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "grid_eval.hpp"
#include "parallel.hpp"
#include "pqc/errors.hpp"
#include "pqc/fourier.hpp"
#include "pqc/gradient.hpp"
#include "pqc/moments.hpp"
#include "pqc/rng.hpp"
#include "pqc/serialize.hpp"
#include "pqc/state.hpp"
#include "pqc/stats.hpp"
#include "pqc/templates.hpp"
#include "pqc/version.hpp"

namespace pqc {

namespace {

const std::vector<std::string> kExperiments = {
    "fig3", "fig4", "gradvar", "expressibility", "spectrum"};

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> base_echo(
    const ExperimentConfig& cfg) {
  return {
      {"experiment", cfg.experiment},
      {"version", std::string(kVersion)},
      {"qubits", join(cfg.qubits)},
      {"layers", join(cfg.effective_layers())},
      {"samples", std::to_string(cfg.samples)},
      {"seed", std::to_string(cfg.seed)},
      {"output_type", to_string(cfg.output_type)},
      {"axis", to_string(cfg.axis)},
      {"entangler", to_string(cfg.entangler)},
  };
}

Model qnn_model(const ExperimentConfig& cfg, int n, int L) {
  Model model = qnn(n, L, cfg.axis, cfg.entangler);
  model.obs = default_observable(n, cfg.output_type);
  return model;
}

// Layered templates are defined for 2..kMaxQubits qubits; cells outside that
// range are reported and skipped so sweeps keep running.
bool layered_feasible(int n, std::vector<std::string>& skips) {
  if (n >= 2 && n <= kMaxQubits) return true;
  skips.push_back("n=" + std::to_string(n) + " layered circuits need 2.." +
                  std::to_string(kMaxQubits) + " qubits");
  return false;
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

class WallTimer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

void ExperimentConfig::validate() const {
  if (std::find(kExperiments.begin(), kExperiments.end(), experiment) ==
      kExperiments.end()) {
    throw ConfigError("unknown experiment '" + experiment +
                      "' (expected fig3, fig4, gradvar, expressibility, or "
                      "spectrum)");
  }
  if (qubits.empty()) throw ConfigError("qubit list is empty");
  for (int n : qubits) {
    if (n < 1) throw ConfigError("qubit counts must be positive");
  }
  for (int L : layers) {
    if (L < 1) throw ConfigError("layer counts must be at least 1");
  }
  if (samples < 2) {
    throw ConfigError("samples must be at least 2; got " +
                      std::to_string(samples));
  }
  if (format != "csv" && format != "json") {
    throw ConfigError("format must be csv or json; got '" + format + "'");
  }
  if (workers < 0) throw ConfigError("workers must be non-negative");
  if (grid < 0) throw ConfigError("grid size must be non-negative");
}

std::vector<int> ExperimentConfig::effective_layers() const {
  if (!layers.empty()) return layers;
  if (experiment == "fig4") return {15};
  if (experiment == "gradvar") return {20};
  if (experiment == "expressibility") return {1, 20};
  if (experiment == "spectrum") return {5};
  std::vector<int> out;
  for (int L = 5; L <= 50; L += 5) out.push_back(L);
  return out;
}

std::vector<std::uint64_t> ExperimentConfig::effective_seeds() const {
  if (!seeds.empty()) return seeds;
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < 5; ++s) out.push_back(seed + s);
  return out;
}

void apply_config_json(ExperimentConfig& cfg, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "experiment") {
        cfg.experiment = value.get<std::string>();
      } else if (key == "qubits") {
        cfg.qubits = value.get<std::vector<int>>();
      } else if (key == "layers") {
        cfg.layers = value.get<std::vector<int>>();
      } else if (key == "samples") {
        cfg.samples = value.get<int>();
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "output_type") {
        cfg.output_type = parse_output_type(value.get<std::string>());
      } else if (key == "axis") {
        cfg.axis = parse_axis(value.get<std::string>());
      } else if (key == "entangler") {
        cfg.entangler = parse_entangler(value.get<std::string>());
      } else if (key == "output") {
        cfg.output = value.get<std::string>();
      } else if (key == "format") {
        cfg.format = value.get<std::string>();
      } else if (key == "workers") {
        cfg.workers = value.get<int>();
      } else if (key == "M" || key == "moment_samples") {
        cfg.moment_samples = value.get<int>();
      } else if (key == "seeds") {
        cfg.seeds = value.get<std::vector<std::uint64_t>>();
      } else if (key == "template") {
        cfg.template_path = value.get<std::string>();
      } else if (key == "grid") {
        cfg.grid = value.get<int>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config value: ") + e.what());
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  ExperimentConfig cfg;
  apply_config_json(cfg, buf.str());
  return cfg;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::uint64_t cell_seed(std::uint64_t seed, int n, int L) {
  const std::uint64_t cell =
      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) |
      static_cast<std::uint32_t>(L);
  return mix64(seed ^ mix64(cell));
}

ExperimentRecord run_fig3(const ExperimentConfig& cfg) {
  cfg.validate();
  const WallTimer timer;
  ExperimentRecord rec;
  rec.echo = base_echo(cfg);
  rec.columns = {"n", "L", "n_samples", "mean", "variance", "theory"};
  for (int n : cfg.qubits) {
    if (!layered_feasible(n, rec.skips)) continue;
    for (int L : cfg.effective_layers()) {
      const Model model = qnn_model(cfg, n, L);
      const SumSquareStats stats = sum_sq_statistics(
          model, cfg.samples, cell_seed(cfg.seed, n, L), cfg.workers);
      rec.rows.push_back({std::to_string(n), std::to_string(L),
                          std::to_string(stats.n_samples),
                          format_double(stats.mean),
                          format_double(stats.variance),
                          format_double(two_design_sum_sq(n, cfg.output_type))});
    }
  }
  rec.wall_ms = timer.ms();
  return rec;
}

ExperimentRecord run_fig4(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<int> layers = cfg.effective_layers();
  if (layers.size() != 1) {
    throw ConfigError("fig4 runs at a single depth; got " +
                      std::to_string(layers.size()) + " layer values");
  }
  const int L = layers[0];
  const WallTimer timer;
  ExperimentRecord rec;
  rec.echo = base_echo(cfg);
  rec.columns = {"n", "k", "median_abs", "max_abs"};
  for (int n : cfg.qubits) {
    if (!layered_feasible(n, rec.skips)) continue;
    const Model model = qnn_model(cfg, n, L);
    const int R = data_gate_count(model);
    const int width = 2 * R + 1;
    const detail::GridEvaluator eval(model, width);
    std::vector<double> abs_vals(static_cast<std::size_t>(cfg.samples) *
                                 static_cast<std::size_t>(width));
    const std::uint64_t cell = cell_seed(cfg.seed, n, L);
    detail::parallel_for(cfg.samples, cfg.workers, [&](int s) {
      SplitMix64 rng = substream(cell, static_cast<std::uint64_t>(s));
      const ParamMap extra = detail::draw_unfixed_params(model, rng);
      const FourierSpectrum spec =
          extract_coefficients(eval.evaluate(extra), R);
      double* row =
          abs_vals.data() + static_cast<std::size_t>(s) * width;
      for (int m = 0; m < width; ++m) {
        row[m] = std::abs(spec.coeffs[static_cast<std::size_t>(m)]);
      }
    });
    std::vector<double> column(static_cast<std::size_t>(cfg.samples));
    for (int k = -R; k <= R; ++k) {
      const int m = k + R;
      double max_abs = 0.0;
      for (int s = 0; s < cfg.samples; ++s) {
        const double v =
            abs_vals[static_cast<std::size_t>(s) * width + m];
        column[static_cast<std::size_t>(s)] = v;
        max_abs = std::max(max_abs, v);
      }
      rec.rows.push_back({std::to_string(n), std::to_string(k),
                          format_double(median_of(column)),
                          format_double(max_abs)});
    }
  }
  rec.wall_ms = timer.ms();
  return rec;
}

ExperimentRecord run_gradvar(const ExperimentConfig& cfg) {
  cfg.validate();
  const WallTimer timer;
  ExperimentRecord rec;
  rec.echo = base_echo(cfg);
  rec.columns = {"n", "L", "i", "variance", "n_samples", "seed"};
  const std::vector<int> layers = cfg.effective_layers();
  std::vector<std::vector<std::pair<int, double>>> fit_points(layers.size());
  for (int n : cfg.qubits) {
    if (!layered_feasible(n, rec.skips)) continue;
    for (std::size_t li = 0; li < layers.size(); ++li) {
      const int L = layers[li];
      const CircuitTemplate tmpl = hea(n, L, cfg.axis, cfg.entangler);
      const Observable obs = default_observable(n, cfg.output_type);
      const GradVarEntry entry =
          gradient_variance(tmpl, obs, L, 0, cfg.samples,
                            cell_seed(cfg.seed, n, L), cfg.workers);
      rec.rows.push_back({std::to_string(entry.n), std::to_string(entry.L),
                          std::to_string(entry.i),
                          format_double(entry.variance),
                          std::to_string(entry.n_samples),
                          std::to_string(entry.seed)});
      if (entry.variance > 0) {
        fit_points[li].emplace_back(n, entry.variance);
      }
    }
  }
  for (std::size_t li = 0; li < layers.size(); ++li) {
    const auto& points = fit_points[li];
    bool distinct = false;
    for (std::size_t j = 1; j < points.size(); ++j) {
      if (points[j].first != points[0].first) distinct = true;
    }
    if (!distinct) {
      rec.comments.push_back(
          "fit: L=" + std::to_string(layers[li]) +
          " unavailable (needs two positive-variance qubit counts)");
      continue;
    }
    const DecayFit fit = fit_decay_base(points);
    rec.comments.push_back(
        "fit: L=" + std::to_string(layers[li]) + " b=" + format_double(fit.b) +
        " slope=" + format_double(fit.slope) +
        " intercept=" + format_double(fit.intercept) +
        " r2=" + format_double(fit.r2));
  }
  rec.wall_ms = timer.ms();
  return rec;
}

ExperimentRecord run_expressibility(const ExperimentConfig& cfg) {
  cfg.validate();
  const WallTimer timer;
  ExperimentRecord rec;
  rec.echo = base_echo(cfg);
  rec.echo.emplace_back("M", std::to_string(cfg.moment_samples));
  rec.echo.emplace_back("seeds", join(cfg.effective_seeds()));
  rec.columns = {"n", "L", "M", "epsilon2", "seed"};
  for (int n : cfg.qubits) {
    if (n > 5) {
      rec.skips.push_back("n=" + std::to_string(n) +
                          " expressibility cap n <= 5");
      continue;
    }
    if (!layered_feasible(n, rec.skips)) continue;
    const SecondMomentMatrix haar = haar_second_moment(n);
    rec.rows.push_back({std::to_string(n), "0",
                        std::to_string(cfg.moment_samples),
                        format_double(expressibility2(haar, haar)),
                        std::to_string(cfg.seed)});
    for (int L : cfg.effective_layers()) {
      const CircuitTemplate tmpl = hea(n, L, cfg.axis, cfg.entangler);
      for (std::uint64_t s : cfg.effective_seeds()) {
        const double eps2 = expressibility2(
            haar, ensemble_second_moment(tmpl, zero_state(n),
                                         cfg.moment_samples, s));
        rec.rows.push_back({std::to_string(n), std::to_string(L),
                            std::to_string(cfg.moment_samples),
                            format_double(eps2), std::to_string(s)});
      }
    }
  }
  rec.wall_ms = timer.ms();
  return rec;
}

ExperimentRecord run_spectrum(const ExperimentConfig& cfg) {
  cfg.validate();
  const WallTimer timer;
  Model model;
  if (!cfg.template_path.empty()) {
    model.tmpl = load_template(cfg.template_path);
    if (model.tmpl.data_vars.empty()) {
      throw ConfigError("template '" + cfg.template_path +
                        "' declares no data variables to take a spectrum in");
    }
    model.var = FourierVar::data(model.tmpl.data_vars[0]);
    model.obs = default_observable(model.tmpl.n, cfg.output_type);
  } else {
    model = qnn_model(cfg, cfg.qubits[0], cfg.effective_layers()[0]);
  }
  SplitMix64 rng = substream(cfg.seed, 0);
  for (auto& [name, values] : detail::draw_unfixed_params(model, rng)) {
    model.fixed_params[name] = values;
  }
  const FourierSpectrum spec = extract_spectrum(model, cfg.grid);

  ExperimentRecord rec;
  rec.echo = base_echo(cfg);
  rec.echo.emplace_back("grid", std::to_string(spec.grid_size));
  rec.echo.emplace_back("var", spec.var);
  if (!cfg.template_path.empty()) {
    rec.echo.emplace_back("template", cfg.template_path);
  }
  rec.columns = {"k", "re", "im", "abs2"};
  for (int k = -spec.R; k <= spec.R; ++k) {
    const cplx c = spec.coeff(k);
    rec.rows.push_back({std::to_string(k), format_double(c.real()),
                        format_double(c.imag()),
                        format_double(std::norm(c))});
  }
  rec.wall_ms = timer.ms();
  return rec;
}

ExperimentRecord run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment == "fig3") return run_fig3(cfg);
  if (cfg.experiment == "fig4") return run_fig4(cfg);
  if (cfg.experiment == "gradvar") return run_gradvar(cfg);
  if (cfg.experiment == "expressibility") return run_expressibility(cfg);
  return run_spectrum(cfg);
}

void write_csv(const ExperimentRecord& record, std::ostream& out) {
  for (const auto& [key, value] : record.echo) {
    out << "# " << key << "=" << value << "\n";
  }
  for (const std::string& reason : record.skips) {
    out << "# skip: " << reason << "\n";
  }
  for (const std::string& comment : record.comments) {
    out << "# " << comment << "\n";
  }
  for (std::size_t c = 0; c < record.columns.size(); ++c) {
    if (c) out << ',';
    out << record.columns[c];
  }
  out << "\n";
  for (const auto& row : record.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << row[c];
    }
    out << "\n";
  }
}

void write_json(const ExperimentRecord& record, std::ostream& out) {
  nlohmann::json doc;
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [key, value] : record.echo) config[key] = value;
  doc["config"] = config;
  doc["columns"] = record.columns;
  doc["rows"] = record.rows;
  doc["skips"] = record.skips;
  doc["comments"] = record.comments;
  doc["wall_ms"] = record.wall_ms;
  out << doc.dump(2) << "\n";
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::size_t start = 1;
      if (start < line.size() && line[start] == ' ') ++start;
      table.comments.push_back(line.substr(start));
      continue;
    }
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) {
        cells.push_back(line.substr(pos));
        break;
      }
      cells.push_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    if (table.columns.empty()) {
      table.columns = std::move(cells);
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace pqc
