#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "pqc/errors.hpp"
#include "pqc/gradient.hpp"
#include "pqc/moments.hpp"
#include "pqc/rng.hpp"
#include "pqc/stats.hpp"
#include "pqc/templates.hpp"

using namespace pqc;

namespace {

constexpr double kPi = std::numbers::pi;

// Single-qubit f(theta) = cos(theta).
CircuitTemplate cosine_tmpl() {
  CircuitTemplate t;
  t.n = 1;
  t.gates = {Gate::rotation('X', 0, Slot::parameter("b0", 0))};
  t.blocks = {{"b0", 1}};
  t.validate();
  return t;
}

std::vector<double> random_theta(int count, SplitMix64& rng) {
  std::vector<double> v;
  for (int i = 0; i < count; ++i) v.push_back(rng.uniform_angle());
  return v;
}

}  // namespace

TEST_CASE("shift-rule gradient of cos(theta)") {
  const CircuitTemplate t = cosine_tmpl();
  const Observable z = Observable::all_z(1);
  CHECK(parameter_shift_grad(t, z, {0.0}, 0) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(parameter_shift_grad(t, z, {kPi / 2}, 0) ==
        doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(parameter_shift_grad(t, z, {1.1}, 0) ==
        doctest::Approx(-std::sin(1.1)).epsilon(1e-12));
}

TEST_CASE("shift rule matches central differences on random models") {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 3);
    const int L = 1 + static_cast<int>(rng.next() % 5);
    const CircuitTemplate t = hea(n, L);
    const Observable obs = rng.next() % 2
                               ? Observable::all_z(n)
                               : default_observable(n, OutputType::probability);
    const std::vector<double> theta = random_theta(t.param_count(), rng);
    const int i = static_cast<int>(rng.next() %
                                   static_cast<unsigned>(t.param_count()));
    const double shift = parameter_shift_grad(t, obs, theta, i);
    const double diff = central_difference(t, obs, theta, i);
    CHECK(std::abs(shift - diff) < 1e-6);
  }
}

TEST_CASE("parameters feeding several gates are refused") {
  CircuitTemplate t;
  t.n = 1;
  t.gates = {Gate::rotation('X', 0, Slot::parameter("b0", 0)),
             Gate::rotation('Y', 0, Slot::parameter("b0", 0))};
  t.blocks = {{"b0", 1}};
  t.validate();
  CHECK_THROWS_WITH_AS(
      static_cast<void>(parameter_shift_grad(t, Observable::all_z(1), {0.3}, 0)),
      doctest::Contains("2 rotation gates"), Error);
}

TEST_CASE("gradient index bounds") {
  const CircuitTemplate t = cosine_tmpl();
  const Observable z = Observable::all_z(1);
  CHECK_THROWS_AS(static_cast<void>(parameter_shift_grad(t, z, {0.3}, 1)),
                  ConfigError);
  CHECK_THROWS_AS(static_cast<void>(parameter_shift_grad(t, z, {0.3}, -1)),
                  ConfigError);
}

TEST_CASE("parameter-independent output has exactly zero gradient") {
  const CircuitTemplate t = hea(2, 1);
  const Observable id = Observable::pauli_string("II");
  const std::vector<double> theta = {0.4, 1.9};
  CHECK(parameter_shift_grad(t, id, theta, 0) == 0.0);
  CHECK(parameter_shift_grad(t, id, theta, 1) == 0.0);
}

TEST_CASE("model overload carries fixed data into the gradient") {
  Model m = qnn(2, 2);
  m.fixed_data["x"] = 0.9;
  const std::vector<double> theta = {0.7, 1.3};
  const double g = parameter_shift_grad(m, theta, 0);
  const double d =
      central_difference(m.tmpl, m.obs, theta, 0, 1e-5, {{"x", 0.9}});
  CHECK(std::abs(g - d) < 1e-6);
}

TEST_CASE("frozen hea(2,2) value and gradient") {
  const CircuitTemplate t = hea(2, 2, Axis::cycle, Entangler::chain);
  const Observable z = Observable::all_z(2);
  const std::vector<double> theta = {0.7, 1.3, 0.4, 1.1};
  CHECK(evaluate(t, z, theta) ==
        doctest::Approx(0.2045943891812681).epsilon(1e-13));
  CHECK(parameter_shift_grad(t, z, theta, 0) ==
        doctest::Approx(-0.17232747671532345).epsilon(1e-13));
}

TEST_CASE("sampled angles map into [-pi, pi) without changing the output") {
  SplitMix64 rng(2718);
  const CircuitTemplate t = hea(2, 2);
  const Observable z = Observable::all_z(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> theta = random_theta(4, rng);
    std::vector<double> wrapped = theta;
    for (double& a : wrapped)
      if (a >= kPi) a -= 2 * kPi;
    CHECK(evaluate(t, z, theta) ==
          doctest::Approx(evaluate(t, z, wrapped)).epsilon(1e-12));
  }
}

TEST_CASE("gradient_variance contract") {
  const CircuitTemplate t = hea(2, 3);
  const Observable z = Observable::all_z(2);
  CHECK_THROWS_AS(static_cast<void>(gradient_variance(t, z, 3, 0, 29, 42)),
                  ConfigError);

  const GradVarEntry a = gradient_variance(t, z, 3, 0, 60, 42);
  CHECK(a.n == 2);
  CHECK(a.L == 3);
  CHECK(a.i == 0);
  CHECK(a.n_samples == 60);
  CHECK(a.seed == 42);
  CHECK(a.variance >= 0.0);

  const GradVarEntry b = gradient_variance(t, z, 3, 0, 60, 42);
  CHECK(a.variance == b.variance);
  const GradVarEntry c = gradient_variance(t, z, 3, 0, 60, 42, 4);
  CHECK(a.variance == c.variance);
  const GradVarEntry d = gradient_variance(t, z, 3, 0, 60, 43);
  CHECK(a.variance != d.variance);
}

TEST_CASE("decay-base fit recovers a synthetic exponential") {
  // variance = 0.75 * 3^{-n}
  std::vector<std::pair<int, double>> pts;
  for (int n : {2, 4, 6, 8}) pts.push_back({n, 0.75 * std::pow(3.0, -n)});
  const DecayFit fit = fit_decay_base(pts);
  CHECK(fit.b == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(0.75)).epsilon(1e-10));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
  for (double r : fit.residuals) CHECK(std::abs(r) < 1e-12);
}

TEST_CASE("decay-base fit input validation") {
  CHECK_THROWS_AS(static_cast<void>(fit_decay_base({{2, 0.1}})), ConfigError);
  CHECK_THROWS_AS(static_cast<void>(fit_decay_base({{2, 0.1}, {2, 0.2}})),
                  ConfigError);
  CHECK_THROWS_AS(static_cast<void>(fit_decay_base({{2, 0.1}, {4, 0.0}})),
                  ConfigError);
  CHECK_THROWS_AS(static_cast<void>(fit_decay_base({{2, 0.1}, {4, -0.2}})),
                  ConfigError);
}

TEST_CASE("haar_second_moment closed form at n=1") {
  const SecondMomentMatrix m = haar_second_moment(1);
  CHECK(m.d == 2);
  REQUIRE(m.matrix.rows() == 4);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.matrix);
  std::vector<double> ev(es.eigenvalues().data(),
                         es.eigenvalues().data() + 4);
  std::sort(ev.begin(), ev.end());
  CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i)
    CHECK(ev[static_cast<std::size_t>(i)] ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("haar_second_moment invariants at n=1 and n=2") {
  for (int n : {1, 2}) {
    const SecondMomentMatrix m = haar_second_moment(n);
    const int dd = m.d * m.d;
    CHECK((m.matrix - m.matrix.adjoint()).norm() < 1e-12);
    CHECK(std::abs(m.matrix.trace().real() - 1.0) < 1e-10);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        m.matrix, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);

    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(dd, dd);
    for (int j = 0; j < m.d; ++j)
      for (int k = 0; k < m.d; ++k) swap(j * m.d + k, k * m.d + j) = 1.0;
    CHECK((m.matrix * swap - swap * m.matrix).norm() < 1e-12);
  }
}

TEST_CASE("haar_second_moment rejects out-of-cap sizes") {
  CHECK_THROWS_AS(haar_second_moment(0), ConfigError);
  CHECK_THROWS_AS(haar_second_moment(6), ConfigError);
  CHECK_NOTHROW(haar_second_moment(5));
}

TEST_CASE("QR-sampled unitaries average to the analytic twirl") {
  const int n = 1;
  const int d = 2;
  const int M = 10000;
  SplitMix64 rng(12345);
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(d);
  psi0(0) = 1.0;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int s = 0; s < M; ++s) {
    const Eigen::MatrixXcd u = haar_random_unitary(d, rng);
    const Eigen::VectorXcd phi = u * psi0;
    Eigen::VectorXcd two(d * d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) two(j * d + k) = phi(j) * phi(k);
    acc += two * two.adjoint();
  }
  acc /= static_cast<double>(M);
  const SecondMomentMatrix exact = haar_second_moment(n);
  CHECK((acc - exact.matrix).cwiseAbs().maxCoeff() < 2e-2);
}

TEST_CASE("haar_random_unitary is unitary and phase-fixed") {
  SplitMix64 rng(55);
  for (int d : {2, 4, 8}) {
    const Eigen::MatrixXcd u = haar_random_unitary(d, rng);
    CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(d, d)).norm() < 1e-12);
  }
}

TEST_CASE("zero-gate ensemble is the input two-copy projector") {
  CircuitTemplate t;
  t.n = 2;
  t.validate();
  const Statevector zero = zero_state(2);
  const SecondMomentMatrix m = ensemble_second_moment(t, zero, 100, 42);
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(16, 16);
  expect(0, 0) = 1.0;
  CHECK((m.matrix - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("parameterless circuit gives a point ensemble") {
  CircuitTemplate t;
  t.n = 1;
  t.gates = {Gate::hadamard(0)};
  t.validate();
  const SecondMomentMatrix m =
      ensemble_second_moment(t, zero_state(1), 150, 7);
  // |+> two-copy projector: all entries 1/4
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(std::abs(m.matrix(r, c) - cplx(0.25, 0)) < 1e-12);
}

TEST_CASE("ensemble_second_moment argument checks") {
  const CircuitTemplate t = hea(2, 1);
  CHECK_THROWS_AS(
      static_cast<void>(ensemble_second_moment(t, zero_state(2), 99, 1)),
      ConfigError);
  CHECK_THROWS_AS(
      static_cast<void>(ensemble_second_moment(t, zero_state(3), 100, 1)),
      StructuralError);
  const CircuitTemplate big = hea(6, 1);
  CHECK_THROWS_AS(
      static_cast<void>(ensemble_second_moment(big, zero_state(6), 100, 1)),
      ConfigError);
}

TEST_CASE("ensemble moment is Hermitian with unit trace") {
  const CircuitTemplate t = hea(2, 2);
  const SecondMomentMatrix m =
      ensemble_second_moment(t, zero_state(2), 200, 3);
  CHECK((m.matrix - m.matrix.adjoint()).norm() < 1e-10);
  CHECK(std::abs(m.matrix.trace().real() - 1.0) < 1e-10);
}

TEST_CASE("expressibility of the analytic moment against itself is zero") {
  const SecondMomentMatrix m = haar_second_moment(2);
  CHECK(expressibility2(m, m) == 0.0);
}

TEST_CASE("expressibility dimension mismatch is refused") {
  CHECK_THROWS_AS(
      static_cast<void>(expressibility2(haar_second_moment(1),
                                        haar_second_moment(2))),
      StructuralError);
}

TEST_CASE("identity-template expressibility matches the eigenvalue oracle") {
  CircuitTemplate t;
  t.n = 1;
  t.validate();
  const double got = expressibility2(t, zero_state(1), 100, 5);

  Eigen::MatrixXcd rho2 = Eigen::MatrixXcd::Zero(4, 4);
  rho2(0, 0) = 1.0;
  const Eigen::MatrixXcd diff = rho2 - haar_second_moment(1).matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff,
                                                     Eigen::EigenvaluesOnly);
  const double oracle = es.eigenvalues().cwiseAbs().sum();
  CHECK(got == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("deeper hea layers are more expressive") {
  double shallow_med = 0.0, deep_med = 0.0;
  std::vector<double> shallow, deep;
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    shallow.push_back(
        expressibility2(hea(2, 1), zero_state(2), 2000, seed));
    deep.push_back(expressibility2(hea(2, 20), zero_state(2), 2000, seed));
  }
  std::sort(shallow.begin(), shallow.end());
  std::sort(deep.begin(), deep.end());
  shallow_med = shallow[1];
  deep_med = deep[1];
  CHECK(deep_med < shallow_med);
}

TEST_CASE("design_bound_check theory values and decision rule") {
  SumSquareStats stats;
  stats.mean = 0.21;
  stats.variance = 9e-4;
  stats.n_samples = 900;  // stderr = 0.001
  stats.per_sample = {};

  const DesignBoundReport r2 =
      design_bound_check(2, 20, stats, OutputType::expectation, 0.05);
  CHECK(r2.theory == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(r2.stderr_mean == doctest::Approx(0.001).epsilon(1e-12));
  CHECK(r2.satisfied);  // |0.21-0.2| = 0.01 <= 0.05 + 0.003

  const DesignBoundReport tight =
      design_bound_check(2, 20, stats, OutputType::expectation, 0.001);
  CHECK_FALSE(tight.satisfied);  // 0.01 > 0.001 + 0.003

  const DesignBoundReport none =
      design_bound_check(2, 20, stats, OutputType::expectation);
  CHECK_FALSE(none.epsilon2.has_value());
  CHECK_FALSE(none.satisfied);  // 0.01 > 0 + 0.003

  CHECK(design_bound_check(2, 1, stats, OutputType::probability).theory ==
        doctest::Approx(0.1).epsilon(1e-15));
  CHECK(design_bound_check(8, 1, stats, OutputType::expectation).theory ==
        doctest::Approx(1.0 / 257.0).epsilon(1e-15));
  CHECK(two_design_sum_sq(4, OutputType::probability) ==
        doctest::Approx(1.0 / 136.0).epsilon(1e-15));
}

TEST_CASE("typical outputs shrink with qubit count under deep embeddings") {
  // median |f| over random draws at L=15
  auto median_abs_f = [](int n) {
    const Model m = qnn(n, 15);
    std::vector<double> vals;
    for (int s = 0; s < 40; ++s) {
      SplitMix64 sub = substream(31 + static_cast<std::uint64_t>(n), s);
      std::vector<double> theta;
      for (int i = 0; i < n; ++i) theta.push_back(sub.uniform_angle());
      const double x = sub.uniform_angle();
      vals.push_back(std::abs(evaluate(m.tmpl, m.obs, theta, {{"x", x}})));
    }
    std::nth_element(vals.begin(), vals.begin() + 20, vals.end());
    return vals[20];
  };
  const double m2 = median_abs_f(2);
  const double m4 = median_abs_f(4);
  const double m6 = median_abs_f(6);
  CHECK(m4 < m2);
  CHECK(m6 < m4);
}
