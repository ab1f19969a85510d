#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "pqc/kernels.hpp"

namespace pqc {

inline constexpr int kMaxQubits = 12;

// Dense n-qubit state. Qubit 0 is the least significant bit of the
// amplitude index.
class Statevector {
 public:
  explicit Statevector(int n);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }

  cplx* data() { return amp_.data(); }
  const cplx* data() const { return amp_.data(); }
  std::span<const cplx> amplitudes() const { return amp_; }
  cplx operator[](std::size_t i) const { return amp_[i]; }

  double norm() const;

 private:
  int n_;
  std::vector<cplx> amp_;
};

// |0...0> on n qubits; 1 <= n <= 12.
Statevector zero_state(int n);

}  // namespace pqc
