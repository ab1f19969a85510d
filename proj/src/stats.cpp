#include "pqc/stats.hpp"

#include <cmath>
#include <string>

#include "grid_eval.hpp"
#include "parallel.hpp"
#include "pqc/errors.hpp"
#include "pqc/fourier.hpp"
#include "pqc/rng.hpp"

namespace pqc {

double SumSquareStats::stderr_mean() const {
  if (n_samples < 1) return 0.0;
  return std::sqrt(variance / n_samples);
}

SumSquareStats sum_sq_statistics(const Model& model, int n_samples,
                                 std::uint64_t seed, int workers, int N) {
  if (n_samples < 2) {
    throw ConfigError("sample count " + std::to_string(n_samples) +
                      " is too small; variance needs at least 2");
  }
  const int R = data_gate_count(model);
  if (N == 0) N = 2 * R + 1;
  const detail::GridEvaluator eval(model, N);

  SumSquareStats stats;
  stats.n_samples = n_samples;
  stats.per_sample.resize(static_cast<std::size_t>(n_samples));
  detail::parallel_for(n_samples, workers, [&](int s) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(s));
    const ParamMap extra = detail::draw_unfixed_params(model, rng);
    const std::vector<double> values = eval.evaluate(extra);
    stats.per_sample[static_cast<std::size_t>(s)] =
        parseval_sum(extract_coefficients(values, R));
  });

  double sum = 0.0;
  for (double v : stats.per_sample) sum += v;
  stats.mean = sum / n_samples;
  double ss = 0.0;
  for (double v : stats.per_sample) {
    const double d = v - stats.mean;
    ss += d * d;
  }
  stats.variance = ss / (n_samples - 1);
  return stats;
}

}  // namespace pqc
