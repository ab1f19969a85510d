#pragma once

#include <cstdint>
#include <vector>

#include "pqc/templates.hpp"

namespace pqc {

// Output of the circuit bound to the flat parameter vector (blocks in
// declaration order) and the given data values.
double evaluate(const CircuitTemplate& tmpl, const Observable& obs,
                const std::vector<double>& theta, const DataMap& data = {});

// Two-point parameter-shift rule (f(theta + pi/2 e_i) - f(theta - pi/2 e_i))
// / 2, exact for parameters driving a single Pauli-string rotation. A
// parameter feeding several gates is refused (the two-point rule does not
// apply to composite generators).
double parameter_shift_grad(const CircuitTemplate& tmpl, const Observable& obs,
                            const std::vector<double>& theta, int i,
                            const DataMap& data = {});
double parameter_shift_grad(const Model& model,
                            const std::vector<double>& theta, int i);

// Central finite difference, for cross-checks.
double central_difference(const CircuitTemplate& tmpl, const Observable& obs,
                          const std::vector<double>& theta, int i,
                          double h = 1e-5, const DataMap& data = {});

struct GradVarEntry {
  int n = 0;
  int L = 0;
  int i = 0;
  double variance = 0.0;
  int n_samples = 0;
  std::uint64_t seed = 0;
};

// Unbiased sample variance of the parameter-shift gradient in component i
// over uniform [0, 2pi) parameter draws (substream per sample). Requires
// n_samples >= 30.
GradVarEntry gradient_variance(const CircuitTemplate& tmpl,
                               const Observable& obs, int L, int i,
                               int n_samples, std::uint64_t seed,
                               int workers = 0, const DataMap& data = {});

struct DecayFit {
  double b = 0.0;  // variance ~ C * b^{-n}
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::vector<double> residuals;
};

// Ordinary least squares of ln(variance) against n*ln(2); b = 2^{-slope}.
DecayFit fit_decay_base(const std::vector<std::pair<int, double>>& points);

}  // namespace pqc
