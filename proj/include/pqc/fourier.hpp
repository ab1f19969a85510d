#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pqc/templates.hpp"

namespace pqc {

// Fourier data of a model output in its spectral variable, following the
// f(x) = sum_k c_k e^{-ikx} convention.
struct FourierSpectrum {
  int R = 0;
  std::vector<cplx> coeffs;  // index k + R for k in [-R, R]
  int grid_size = 0;
  std::string var;
  std::uint64_t fixed_snapshot = 0;

  cplx coeff(int k) const;
};

// Model output on the equispaced grid x_j = 2*pi*j/N, j = 0..N-1, with every
// non-spectral slot resolved from the model's fixed bindings. N must be at
// least 2*data_gate_count(model) + 1.
std::vector<double> evaluate_on_grid(const Model& model, int N);

// Direct DFT inversion: c_k = (1/N) sum_j samples_j e^{+ik 2pi j/N} for
// |k| <= R. Exact for trigonometric polynomials of degree <= R when
// N >= 2R+1 (enforced).
FourierSpectrum extract_coefficients(const std::vector<double>& samples,
                                     int R);

// evaluate_on_grid + extract_coefficients with R = data_gate_count(model);
// N = 0 selects the minimal odd grid 2R+1. Records the variable name and a
// hash of the fixed bindings.
FourierSpectrum extract_spectrum(const Model& model, int N = 0);

// Sum of |c_k|^2 over the spectrum. Equals the grid mean of f^2 (discrete
// Parseval identity).
double parseval_sum(const FourierSpectrum& spectrum);

// f(x) = sum_k c_k e^{-ikx}, real part (outputs are real-valued functions).
double reconstruct(const FourierSpectrum& spectrum, double x);

// Order-independent hash of the model's fixed parameter and data bindings.
std::uint64_t fixed_bindings_hash(const Model& model);

}  // namespace pqc
