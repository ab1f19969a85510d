#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "pqc/errors.hpp"
#include "pqc/fourier.hpp"
#include "pqc/gradient.hpp"
#include "pqc/rng.hpp"
#include "pqc/stats.hpp"
#include "pqc/templates.hpp"

using namespace pqc;

namespace {

constexpr double kPi = std::numbers::pi;

// f(x) = <Z> of RX(x)|0> = cos x.
Model cosine_model() {
  Model m;
  m.tmpl.n = 1;
  m.tmpl.gates = {Gate::rotation('X', 0, Slot::data("x"))};
  m.tmpl.data_vars = {"x"};
  m.obs = Observable::all_z(1);
  m.var = FourierVar::data("x");
  m.validate();
  return m;
}

// f(x) = <Z> of RZ(x)|0> = 1 (constant in x).
Model constant_model() {
  Model m;
  m.tmpl.n = 1;
  m.tmpl.gates = {Gate::rotation('Z', 0, Slot::data("x"))};
  m.tmpl.data_vars = {"x"};
  m.obs = Observable::all_z(1);
  m.var = FourierVar::data("x");
  m.validate();
  return m;
}

// Random layered model with a mix of fixed and trainable angles, spectrum in
// the data variable.
Model random_model(SplitMix64& rng) {
  const int n = 2 + static_cast<int>(rng.next() % 3);
  const int L = 1 + static_cast<int>(rng.next() % 5);
  Model m;
  m.tmpl = hee(n, L);
  CircuitTemplate train = hea(n, 1, Axis::cycle, Entangler::chain);
  for (Gate& g : train.gates) m.tmpl.gates.push_back(g);
  m.tmpl.blocks = train.blocks;
  m.obs = rng.next() % 2 ? Observable::all_z(n)
                         : default_observable(n, OutputType::probability);
  m.var = FourierVar::data("x");
  std::vector<double> theta;
  for (int i = 0; i < n; ++i) theta.push_back(rng.uniform_angle());
  m.fixed_params["b0"] = theta;
  m.validate();
  return m;
}

}  // namespace

TEST_CASE("cosine model on the 5-point grid") {
  const Model m = cosine_model();
  const std::vector<double> f = evaluate_on_grid(m, 5);
  REQUIRE(f.size() == 5);
  for (int j = 0; j < 5; ++j)
    CHECK(f[static_cast<std::size_t>(j)] ==
          doctest::Approx(std::cos(2 * kPi * j / 5)).epsilon(1e-12));

  const FourierSpectrum spec = extract_coefficients(f, 1);
  CHECK(std::abs(spec.coeff(1) - cplx(0.5, 0)) < 1e-12);
  CHECK(std::abs(spec.coeff(-1) - cplx(0.5, 0)) < 1e-12);
  CHECK(std::abs(spec.coeff(0)) < 1e-12);
  CHECK(parseval_sum(spec) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("constant model spectrum is a lone c_0") {
  const Model m = constant_model();
  const std::vector<double> f = evaluate_on_grid(m, 5);
  for (double v : f) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
  const FourierSpectrum spec = extract_coefficients(f, 1);
  CHECK(std::abs(spec.coeff(0) - cplx(1, 0)) < 1e-12);
  CHECK(std::abs(spec.coeff(1)) < 1e-12);
  CHECK(parseval_sum(spec) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero samples give a zero spectrum") {
  const FourierSpectrum spec = extract_coefficients({0, 0, 0, 0, 0}, 2);
  CHECK(parseval_sum(spec) == 0.0);
}

TEST_CASE("grids below the band limit are refused, with the minimum named") {
  Model m = qnn(2, 2);  // R = 4, minimum grid 9
  m.fixed_params["theta"] = {0.7, 1.3};
  CHECK_THROWS_WITH_AS(static_cast<void>(evaluate_on_grid(m, 8)),
                       doctest::Contains("9"), ConfigError);
  CHECK_NOTHROW(static_cast<void>(evaluate_on_grid(m, 9)));
  CHECK_THROWS_AS(static_cast<void>(extract_coefficients({1, 2, 3}, 2)),
                  ConfigError);
  CHECK_THROWS_AS(static_cast<void>(extract_coefficients({1, 2, 3}, -1)),
                  ConfigError);
}

TEST_CASE("coefficients out of band are refused") {
  const FourierSpectrum spec = extract_coefficients({1, 1, 1, 1, 1}, 2);
  CHECK_NOTHROW(static_cast<void>(spec.coeff(2)));
  CHECK_THROWS_AS(static_cast<void>(spec.coeff(3)), Error);
  CHECK_THROWS_AS(static_cast<void>(spec.coeff(-3)), Error);
}

TEST_CASE("two-grid agreement certifies the band limit") {
  SplitMix64 rng(606);
  for (int trial = 0; trial < 8; ++trial) {
    const Model m = random_model(rng);
    const int R = data_gate_count(m);
    const FourierSpectrum a = extract_spectrum(m, 2 * R + 1);
    const FourierSpectrum b = extract_spectrum(m, 4 * R + 1);
    for (int k = -R; k <= R; ++k)
      CHECK(std::abs(a.coeff(k) - b.coeff(k)) < 1e-10);
  }
}

TEST_CASE("extracted spectra are Hermitian and satisfy Parseval") {
  SplitMix64 rng(607);
  for (int trial = 0; trial < 8; ++trial) {
    const Model m = random_model(rng);
    const int R = data_gate_count(m);
    const int N = 2 * R + 1;
    const std::vector<double> f = evaluate_on_grid(m, N);
    const FourierSpectrum spec = extract_coefficients(f, R);

    for (int k = 0; k <= R; ++k)
      CHECK(std::abs(spec.coeff(-k) - std::conj(spec.coeff(k))) < 1e-10);

    double grid_mean_sq = 0.0;
    for (double v : f) grid_mean_sq += v * v;
    grid_mean_sq /= static_cast<double>(N);
    CHECK(parseval_sum(spec) ==
          doctest::Approx(grid_mean_sq).epsilon(1e-10));
  }
}

TEST_CASE("reconstruction matches direct evaluation off the grid") {
  SplitMix64 rng(608);
  for (int trial = 0; trial < 4; ++trial) {
    const Model m = random_model(rng);
    const FourierSpectrum spec = extract_spectrum(m);
    for (int p = 0; p < 20; ++p) {
      const double x = rng.uniform_angle();
      const double direct =
          evaluate(m.tmpl, m.obs, m.fixed_params.at("b0"), {{"x", x}});
      CHECK(std::abs(reconstruct(spec, x) - direct) < 1e-8);
    }
  }
}

TEST_CASE("reconstruction is 2*pi periodic") {
  SplitMix64 rng(609);
  const Model m = random_model(rng);
  const FourierSpectrum spec = extract_spectrum(m);
  for (int p = 0; p < 10; ++p) {
    const double x = rng.uniform_angle();
    CHECK(std::abs(reconstruct(spec, x) - reconstruct(spec, x + 2 * kPi)) <
          1e-10);
  }
}

TEST_CASE("frozen qnn(2,2) spectrum at theta=(0.7,1.3)") {
  Model m = qnn(2, 2);
  m.fixed_params["theta"] = {0.7, 1.3};
  const FourierSpectrum spec = extract_spectrum(m);
  CHECK(spec.R == 4);
  CHECK(spec.grid_size == 9);
  CHECK(spec.var == "x");

  const std::vector<double> f = evaluate_on_grid(m, 9);
  CHECK(f[0] == doctest::Approx(0.26749882862458735).epsilon(1e-13));
  CHECK(f[1] == doctest::Approx(-0.31748502936697054).epsilon(1e-13));
  CHECK(f[2] == doctest::Approx(-0.15671207769091078).epsilon(1e-13));

  CHECK(std::abs(spec.coeff(0) - cplx(0.1337494143122935, 0)) < 1e-12);
  CHECK(std::abs(spec.coeff(2) -
                 cplx(0.06687470715614673, -0.2408895463542982)) < 1e-12);
  CHECK(std::abs(spec.coeff(-2) - std::conj(spec.coeff(2))) < 1e-12);
  CHECK(std::abs(spec.coeff(1)) < 1e-12);
  CHECK(std::abs(spec.coeff(3)) < 1e-12);
  CHECK(std::abs(spec.coeff(4)) < 1e-12);
  CHECK(parseval_sum(spec) ==
        doctest::Approx(0.1428889058288815).epsilon(1e-12));
}

TEST_CASE("spectrum records the parameter variable name") {
  Model m;
  m.tmpl = hea(2, 1);
  m.obs = Observable::all_z(2);
  m.var = FourierVar::param("b0", 1);
  m.fixed_params["b0"] = {0.4, 0.0};  // spectral entry ignored at bind time
  m.validate();
  const FourierSpectrum spec = extract_spectrum(m);
  CHECK(spec.R == 1);
  CHECK(spec.var == "b0[1]");
}

TEST_CASE("fixed_bindings_hash tracks content, not object identity") {
  Model a = qnn(2, 2);
  a.fixed_params["theta"] = {0.7, 1.3};
  Model b = qnn(2, 2);
  b.fixed_params["theta"] = {0.7, 1.3};
  CHECK(fixed_bindings_hash(a) == fixed_bindings_hash(b));
  b.fixed_params["theta"] = {0.7, 1.30000001};
  CHECK(fixed_bindings_hash(a) != fixed_bindings_hash(b));
  b.fixed_params["theta"] = {0.7, 1.3};
  b.fixed_data["y"] = 0.0;
  CHECK(fixed_bindings_hash(a) != fixed_bindings_hash(b));
}

TEST_CASE("sum_sq_statistics is deterministic at any worker count") {
  const Model m = qnn(2, 3);
  const SumSquareStats one = sum_sq_statistics(m, 24, 42, 1);
  const SumSquareStats four = sum_sq_statistics(m, 24, 42, 4);
  CHECK(one.mean == four.mean);
  CHECK(one.variance == four.variance);
  REQUIRE(one.per_sample.size() == four.per_sample.size());
  for (std::size_t i = 0; i < one.per_sample.size(); ++i)
    CHECK(one.per_sample[i] == four.per_sample[i]);

  const SumSquareStats rerun = sum_sq_statistics(m, 24, 42, 3);
  CHECK(rerun.mean == one.mean);
}

TEST_CASE("sum_sq_statistics needs at least two samples") {
  const Model m = qnn(2, 1);
  CHECK_THROWS_AS(static_cast<void>(sum_sq_statistics(m, 1, 42)), ConfigError);
  CHECK_THROWS_AS(static_cast<void>(sum_sq_statistics(m, 0, 42)), ConfigError);
  CHECK_NOTHROW(static_cast<void>(sum_sq_statistics(m, 2, 42)));
}

TEST_CASE("fully fixed model has zero variance across samples") {
  Model m = qnn(2, 2);
  m.fixed_params["theta"] = {0.7, 1.3};  // nothing left to draw
  const SumSquareStats stats = sum_sq_statistics(m, 6, 42);
  CHECK(stats.variance == 0.0);
  CHECK(stats.mean == doctest::Approx(0.1428889058288815).epsilon(1e-12));
  for (double v : stats.per_sample) CHECK(v == stats.per_sample[0]);
}

TEST_CASE("statistics summary invariants") {
  const Model m = qnn(2, 2);
  const SumSquareStats stats = sum_sq_statistics(m, 40, 7);
  CHECK(stats.n_samples == 40);
  CHECK(stats.variance >= 0.0);
  double lo = stats.per_sample[0], hi = stats.per_sample[0];
  for (double v : stats.per_sample) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(stats.mean >= lo);
  CHECK(stats.mean <= hi);
  CHECK(stats.stderr_mean() ==
        doctest::Approx(std::sqrt(stats.variance / 40)).epsilon(1e-15));
}

TEST_CASE("per-sample power sums agree between minimal and oversized grids") {
  const Model m = qnn(2, 2);
  const int R = data_gate_count(m);
  const SumSquareStats a = sum_sq_statistics(m, 12, 42, 1);
  const SumSquareStats b = sum_sq_statistics(m, 12, 42, 1, 4 * R + 1);
  for (std::size_t i = 0; i < a.per_sample.size(); ++i)
    CHECK(a.per_sample[i] ==
          doctest::Approx(b.per_sample[i]).epsilon(1e-12));
}

TEST_CASE("spectral parameter slots may coexist with drawn blocks") {
  // spectrum in one trainable angle of hea(2,2); b0 fixed, b1 drawn
  Model m;
  m.tmpl = hea(2, 2);
  m.obs = Observable::all_z(2);
  m.var = FourierVar::param("b0", 0);
  m.fixed_params["b0"] = {0.0, 0.9};
  m.validate();
  const SumSquareStats stats = sum_sq_statistics(m, 8, 11);
  CHECK(stats.n_samples == 8);
  CHECK(stats.variance > 0.0);  // b1 varies across samples
  for (double v : stats.per_sample) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + 1e-12);
  }
}
