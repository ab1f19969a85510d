#include "pqc/gradient.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "parallel.hpp"
#include "pqc/errors.hpp"
#include "pqc/rng.hpp"

namespace pqc {

double evaluate(const CircuitTemplate& tmpl, const Observable& obs,
                const std::vector<double>& theta, const DataMap& data) {
  const Statevector state = run(bind_flat(tmpl, theta, data));
  return pqc::evaluate(state, obs);
}

namespace {

void check_single_rotation(const CircuitTemplate& tmpl, int i) {
  if (i < 0 || i >= tmpl.param_count()) {
    throw ConfigError("parameter index " + std::to_string(i) +
                      " out of range for " +
                      std::to_string(tmpl.param_count()) + " parameters");
  }
  int hits = 0;
  for (const Gate& gate : tmpl.gates) {
    if (gate.kind == Gate::Kind::pauli_rotation &&
        gate.slot.kind == Slot::Kind::parameter &&
        tmpl.flat_index(gate.slot.block, gate.slot.index) == i) {
      ++hits;
    }
  }
  if (hits != 1) {
    throw Error("parameter " + std::to_string(i) + " drives " +
                std::to_string(hits) +
                " rotation gates; the two-point shift rule needs exactly one");
  }
}

}  // namespace

double parameter_shift_grad(const CircuitTemplate& tmpl, const Observable& obs,
                            const std::vector<double>& theta, int i,
                            const DataMap& data) {
  check_single_rotation(tmpl, i);
  std::vector<double> shifted = theta;
  shifted[static_cast<std::size_t>(i)] =
      theta[static_cast<std::size_t>(i)] + std::numbers::pi / 2;
  const double plus = evaluate(tmpl, obs, shifted, data);
  shifted[static_cast<std::size_t>(i)] =
      theta[static_cast<std::size_t>(i)] - std::numbers::pi / 2;
  const double minus = evaluate(tmpl, obs, shifted, data);
  return (plus - minus) / 2;
}

double parameter_shift_grad(const Model& model,
                            const std::vector<double>& theta, int i) {
  return parameter_shift_grad(model.tmpl, model.obs, theta, i,
                              model.fixed_data);
}

double central_difference(const CircuitTemplate& tmpl, const Observable& obs,
                          const std::vector<double>& theta, int i, double h,
                          const DataMap& data) {
  if (i < 0 || i >= static_cast<int>(theta.size())) {
    throw ConfigError("parameter index " + std::to_string(i) +
                      " out of range");
  }
  std::vector<double> shifted = theta;
  shifted[static_cast<std::size_t>(i)] += h;
  const double plus = evaluate(tmpl, obs, shifted, data);
  shifted[static_cast<std::size_t>(i)] =
      theta[static_cast<std::size_t>(i)] - h;
  const double minus = evaluate(tmpl, obs, shifted, data);
  return (plus - minus) / (2 * h);
}

GradVarEntry gradient_variance(const CircuitTemplate& tmpl,
                               const Observable& obs, int L, int i,
                               int n_samples, std::uint64_t seed, int workers,
                               const DataMap& data) {
  if (n_samples < 30) {
    throw ConfigError("gradient variance needs at least 30 samples; got " +
                      std::to_string(n_samples));
  }
  check_single_rotation(tmpl, i);
  const int d = tmpl.param_count();
  std::vector<double> grads(static_cast<std::size_t>(n_samples));
  detail::parallel_for(n_samples, workers, [&](int s) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(s));
    std::vector<double> theta(static_cast<std::size_t>(d));
    for (double& angle : theta) angle = rng.uniform_angle();
    grads[static_cast<std::size_t>(s)] =
        parameter_shift_grad(tmpl, obs, theta, i, data);
  });
  double sum = 0.0;
  for (double g : grads) sum += g;
  const double mean = sum / n_samples;
  double ss = 0.0;
  for (double g : grads) {
    const double dd = g - mean;
    ss += dd * dd;
  }
  GradVarEntry entry;
  entry.n = tmpl.n;
  entry.L = L;
  entry.i = i;
  entry.variance = ss / (n_samples - 1);
  entry.n_samples = n_samples;
  entry.seed = seed;
  return entry;
}

DecayFit fit_decay_base(const std::vector<std::pair<int, double>>& points) {
  if (points.size() < 2) {
    throw ConfigError("decay fit needs at least two (n, variance) points");
  }
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [n, var] : points) {
    if (var <= 0.0) {
      throw ConfigError("decay fit needs positive variances; got " +
                        std::to_string(var) + " at n=" + std::to_string(n));
    }
    xs.push_back(n * std::numbers::ln2);
    ys.push_back(std::log(var));
  }
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    sx += xs[j];
    sy += ys[j];
    sxx += xs[j] * xs[j];
    sxy += xs[j] * ys[j];
  }
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) {
    throw ConfigError("decay fit needs at least two distinct qubit counts");
  }
  DecayFit fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  fit.b = std::exp2(-fit.slope);
  const double ybar = sy / m;
  double ss_res = 0, ss_tot = 0;
  fit.residuals.resize(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double r = ys[j] - (fit.intercept + fit.slope * xs[j]);
    fit.residuals[j] = r;
    ss_res += r * r;
    ss_tot += (ys[j] - ybar) * (ys[j] - ybar);
  }
  fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace pqc
