#include "pqc/moments.hpp"

#include <cmath>
#include <string>

#include "pqc/errors.hpp"

namespace pqc {

namespace {

constexpr int kMomentMaxQubits = 5;

void check_moment_cap(int n) {
  if (n < 1 || n > kMomentMaxQubits) {
    throw ConfigError("second-moment matrices support 1.." +
                      std::to_string(kMomentMaxQubits) + " qubits; got " +
                      std::to_string(n));
  }
}

}  // namespace

SecondMomentMatrix haar_second_moment(int n) {
  check_moment_cap(n);
  const int d = 1 << n;
  const int dd = d * d;
  SecondMomentMatrix out;
  out.d = d;
  out.matrix = Eigen::MatrixXcd::Identity(dd, dd);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      out.matrix(j * d + k, k * d + j) += 1.0;
    }
  }
  out.matrix /= static_cast<double>(d) * (d + 1);
  return out;
}

SecondMomentMatrix haar_second_moment(const Statevector& state) {
  return haar_second_moment(state.num_qubits());
}

SecondMomentMatrix ensemble_second_moment(const CircuitTemplate& tmpl,
                                          const Statevector& state, int M,
                                          std::uint64_t seed) {
  if (M < 100) {
    throw ConfigError("ensemble moment needs at least 100 samples; got " +
                      std::to_string(M));
  }
  check_moment_cap(tmpl.n);
  if (tmpl.n != state.num_qubits()) {
    throw StructuralError("initial state has " +
                          std::to_string(state.num_qubits()) +
                          " qubits; the template has " +
                          std::to_string(tmpl.n));
  }
  const int d = 1 << tmpl.n;
  const int dd = d * d;
  const int p = tmpl.param_count();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dd, dd);
  Eigen::VectorXcd two_copy(dd);
  std::vector<double> theta(static_cast<std::size_t>(p));
  for (int s = 0; s < M; ++s) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(s));
    for (double& angle : theta) angle = rng.uniform_angle();
    const Statevector phi = run(bind_flat(tmpl, theta), state);
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        two_copy(j * d + k) = phi[static_cast<std::size_t>(j)] *
                              phi[static_cast<std::size_t>(k)];
      }
    }
    acc.noalias() += two_copy * two_copy.adjoint();
  }
  SecondMomentMatrix out;
  out.d = d;
  out.matrix = acc / static_cast<double>(M);
  return out;
}

double expressibility2(const SecondMomentMatrix& a,
                       const SecondMomentMatrix& b) {
  if (a.d != b.d) {
    throw StructuralError("moment matrices have different dimensions " +
                          std::to_string(a.d) + " and " + std::to_string(b.d));
  }
  const Eigen::MatrixXcd diff = a.matrix - b.matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      diff, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition of the moment difference failed");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    sum += std::abs(solver.eigenvalues()(i));
  }
  return sum;
}

double expressibility2(const CircuitTemplate& tmpl, const Statevector& state,
                       int M, std::uint64_t seed) {
  return expressibility2(haar_second_moment(tmpl.n),
                         ensemble_second_moment(tmpl, state, M, seed));
}

Eigen::MatrixXcd haar_random_unitary(int d, SplitMix64& rng) {
  if (d < 1) throw ConfigError("unitary dimension must be positive");
  Eigen::MatrixXcd g(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      g(r, c) = cplx(rng.normal(), rng.normal());
    }
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < d; ++c) {
    const cplx diag = r(c, c);
    const double mag = std::abs(diag);
    q.col(c) *= mag > 0 ? diag / mag : cplx(1.0, 0.0);
  }
  return q;
}

DesignBoundReport design_bound_check(int n, int L, const SumSquareStats& stats,
                                     OutputType type,
                                     std::optional<double> epsilon2) {
  DesignBoundReport report;
  report.n = n;
  report.L = L;
  report.type = type;
  report.mean = stats.mean;
  report.variance = stats.variance;
  report.theory = two_design_sum_sq(n, type);
  report.stderr_mean = stats.stderr_mean();
  report.epsilon2 = epsilon2;
  const double budget = epsilon2.value_or(0.0) + 3.0 * report.stderr_mean;
  report.satisfied = std::abs(report.mean - report.theory) <= budget;
  return report;
}

}  // namespace pqc
