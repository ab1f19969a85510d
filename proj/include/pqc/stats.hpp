#pragma once

#include <cstdint>
#include <vector>

#include "pqc/templates.hpp"

namespace pqc {

// Mean and unbiased sample variance of the coefficient power sum over random
// parameter draws.
struct SumSquareStats {
  double mean = 0.0;
  double variance = 0.0;
  int n_samples = 0;
  std::vector<double> per_sample;

  // Standard error of the mean.
  double stderr_mean() const;
};

// For each sample s in [0, n_samples): draws every unfixed parameter block of
// the model uniformly from [0, 2pi) on the substream (seed, s), evaluates the
// spectrum in the model's variable, and records sum_k |c_k|^2. Deterministic
// for a given seed at any worker count (workers = 0 uses the hardware count).
// N = 0 selects the minimal grid 2R+1.
SumSquareStats sum_sq_statistics(const Model& model, int n_samples,
                                 std::uint64_t seed, int workers = 0,
                                 int N = 0);

}  // namespace pqc
