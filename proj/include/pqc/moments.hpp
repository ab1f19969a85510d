#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "pqc/circuit.hpp"
#include "pqc/observable.hpp"
#include "pqc/rng.hpp"
#include "pqc/stats.hpp"

namespace pqc {

// Averaged two-copy state E[(U|psi>)(<psi|U^dag)]^{tensor 2} over a unitary
// ensemble. Basis index j*d + k denotes |j> tensor |k>.
struct SecondMomentMatrix {
  int d = 0;
  Eigen::MatrixXcd matrix;
};

// Closed form of the Haar average for a pure input: (I + S) / (d(d+1)) with
// S the two-copy swap. Capped at n <= 5 (matrix dimension 4^n).
SecondMomentMatrix haar_second_moment(int n);
SecondMomentMatrix haar_second_moment(const Statevector& state);

// Mean over M uniform [0, 2pi) parameter draws (substream per sample,
// accumulated in sample order) of the two-copy projector of the circuit
// output on the given initial state. M >= 100.
SecondMomentMatrix ensemble_second_moment(const CircuitTemplate& tmpl,
                                          const Statevector& state, int M,
                                          std::uint64_t seed);

// Trace norm of the difference of two moment matrices (sum of absolute
// eigenvalues of the Hermitian difference).
double expressibility2(const SecondMomentMatrix& a,
                       const SecondMomentMatrix& b);

// Trace norm between the analytic Haar moment and the ensemble moment of the
// template.
double expressibility2(const CircuitTemplate& tmpl, const Statevector& state,
                       int M, std::uint64_t seed);

// Haar-distributed d x d unitary: QR of a complex Gaussian matrix with the
// R-diagonal phases folded into Q.
Eigen::MatrixXcd haar_random_unitary(int d, SplitMix64& rng);

// Comparison of a measured coefficient power sum against the two-design
// value, with the expressibility budget when available.
struct DesignBoundReport {
  int n = 0;
  int L = 0;
  OutputType type = OutputType::expectation;
  double mean = 0.0;
  double variance = 0.0;
  double theory = 0.0;
  double stderr_mean = 0.0;
  std::optional<double> epsilon2;
  bool satisfied = false;
};

// satisfied holds when |mean - theory| <= epsilon2 + 3*stderr(mean), with
// epsilon2 treated as 0 when absent.
DesignBoundReport design_bound_check(int n, int L, const SumSquareStats& stats,
                                     OutputType type,
                                     std::optional<double> epsilon2 = {});

}  // namespace pqc
