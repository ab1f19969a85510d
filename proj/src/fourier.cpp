#include "pqc/fourier.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "grid_eval.hpp"
#include "pqc/errors.hpp"

namespace pqc {

namespace detail {

ParamMap draw_unfixed_params(const Model& model, SplitMix64& rng) {
  ParamMap params;
  for (const Block& b : model.tmpl.blocks) {
    if (model.fixed_params.contains(b.name)) continue;
    std::vector<double>& v = params[b.name];
    v.resize(static_cast<std::size_t>(b.dim));
    for (double& angle : v) angle = rng.uniform_angle();
  }
  return params;
}

GridEvaluator::GridEvaluator(const Model& model, int N)
    : model_(&model), N_(N), prefix_(model.tmpl.n, N) {
  model.validate();
  const int R = data_gate_count(model);
  const int min_grid = 2 * R + 1;
  if (N < min_grid) {
    throw ConfigError("grid size " + std::to_string(N) +
                      " is below the required minimum " +
                      std::to_string(min_grid) + " (band limit R = " +
                      std::to_string(R) + ")");
  }
  xs_.resize(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    xs_[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / N;
  }
  ha_ = half_angles(xs_);

  const auto& gates = model.tmpl.gates;
  if (model.var.kind == FourierVar::Kind::data) {
    std::size_t last = 0;
    bool any = false;
    for (std::size_t g = 0; g < gates.size(); ++g) {
      if (gates[g].kind == Gate::Kind::pauli_rotation &&
          model.var.matches(gates[g].slot)) {
        last = g;
        any = true;
      }
    }
    if (any) {
      bool cacheable = true;
      for (std::size_t g = 0; g <= last; ++g) {
        if (gates[g].kind == Gate::Kind::pauli_rotation &&
            gates[g].slot.kind == Slot::Kind::parameter) {
          cacheable = false;
          break;
        }
      }
      if (cacheable) split_ = last + 1;
    }
  }
  apply_range(prefix_, 0, split_, {});
}

double GridEvaluator::resolve_angle(const Slot& slot,
                                    const ParamMap& extra) const {
  switch (slot.kind) {
    case Slot::Kind::constant:
      return slot.angle;
    case Slot::Kind::data: {
      auto it = model_->fixed_data.find(slot.var);
      if (it == model_->fixed_data.end()) {
        throw BindingError("data variable '" + slot.var +
                           "' has no fixed binding");
      }
      return it->second;
    }
    case Slot::Kind::parameter: {
      const std::vector<double>* vec = nullptr;
      if (auto it = extra.find(slot.block); it != extra.end()) {
        vec = &it->second;
      } else if (auto fit = model_->fixed_params.find(slot.block);
                 fit != model_->fixed_params.end()) {
        vec = &fit->second;
      }
      if (vec == nullptr) {
        throw BindingError("parameter block '" + slot.block +
                           "' has no binding");
      }
      if (slot.index < 0 || slot.index >= static_cast<int>(vec->size())) {
        throw BindingError("parameter block '" + slot.block + "' has " +
                           std::to_string(vec->size()) +
                           " entries; index " + std::to_string(slot.index) +
                           " is out of range");
      }
      return (*vec)[static_cast<std::size_t>(slot.index)];
    }
  }
  throw BindingError("unresolvable slot");
}

void GridEvaluator::apply_range(GridState& st, std::size_t begin,
                                std::size_t end, const ParamMap& extra) const {
  const auto& gates = model_->tmpl.gates;
  for (std::size_t g = begin; g < end; ++g) {
    const Gate& gate = gates[g];
    if (gate.kind == Gate::Kind::pauli_rotation) {
      if (model_->var.matches(gate.slot)) {
        if (gate.pauli.size() == 1) {
          grid_rot_percol(st, gate.qubits[0], gate.pauli[0], ha_);
        } else {
          grid_pauli_rot_percol(st, gate, ha_);
        }
        continue;
      }
      if (gate.slot.kind != Slot::Kind::constant) {
        Gate resolved = gate;
        resolved.slot = Slot::constant(resolve_angle(gate.slot, extra));
        grid_apply_const(st, resolved);
        continue;
      }
    }
    grid_apply_const(st, gate);
  }
}

std::vector<double> GridEvaluator::evaluate(const ParamMap& extra) const {
  GridState st = prefix_;
  apply_range(st, split_, model_->tmpl.gates.size(), extra);
  return grid_evaluate(st, model_->obs);
}

}  // namespace detail

cplx FourierSpectrum::coeff(int k) const {
  if (k < -R || k > R) {
    throw Error("frequency " + std::to_string(k) + " outside the band [-" +
                std::to_string(R) + ", " + std::to_string(R) + "]");
  }
  return coeffs[static_cast<std::size_t>(k + R)];
}

std::vector<double> evaluate_on_grid(const Model& model, int N) {
  return detail::GridEvaluator(model, N).evaluate();
}

FourierSpectrum extract_coefficients(const std::vector<double>& samples,
                                     int R) {
  if (R < 0) throw ConfigError("max frequency must be non-negative");
  const int N = static_cast<int>(samples.size());
  if (N < 2 * R + 1) {
    throw ConfigError("grid of " + std::to_string(N) +
                      " samples cannot resolve frequencies to " +
                      std::to_string(R) + "; need at least " +
                      std::to_string(2 * R + 1) + " samples");
  }
  std::vector<cplx> roots(static_cast<std::size_t>(N));
  for (int m = 0; m < N; ++m) {
    const double a = 2.0 * std::numbers::pi * m / N;
    roots[static_cast<std::size_t>(m)] = cplx(std::cos(a), std::sin(a));
  }
  FourierSpectrum spec;
  spec.R = R;
  spec.grid_size = N;
  spec.coeffs.resize(static_cast<std::size_t>(2 * R + 1));
  for (int k = -R; k <= R; ++k) {
    cplx acc(0.0, 0.0);
    for (int j = 0; j < N; ++j) {
      long long m = static_cast<long long>(k) * j % N;
      if (m < 0) m += N;
      acc += samples[static_cast<std::size_t>(j)] *
             roots[static_cast<std::size_t>(m)];
    }
    spec.coeffs[static_cast<std::size_t>(k + R)] = acc / static_cast<double>(N);
  }
  return spec;
}

FourierSpectrum extract_spectrum(const Model& model, int N) {
  const int R = data_gate_count(model);
  if (N == 0) N = 2 * R + 1;
  FourierSpectrum spec = extract_coefficients(evaluate_on_grid(model, N), R);
  if (model.var.kind == FourierVar::Kind::data) {
    spec.var = model.var.var;
  } else {
    spec.var =
        model.var.block + "[" + std::to_string(model.var.index) + "]";
  }
  spec.fixed_snapshot = fixed_bindings_hash(model);
  return spec;
}

double parseval_sum(const FourierSpectrum& spectrum) {
  double sum = 0.0;
  for (const cplx& c : spectrum.coeffs) sum += std::norm(c);
  return sum;
}

double reconstruct(const FourierSpectrum& spectrum, double x) {
  cplx acc(0.0, 0.0);
  for (int k = -spectrum.R; k <= spectrum.R; ++k) {
    const double a = k * x;
    acc += spectrum.coeffs[static_cast<std::size_t>(k + spectrum.R)] *
           cplx(std::cos(a), -std::sin(a));
  }
  return acc.real();
}

namespace {

void hash_bytes(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
}

void hash_double(std::uint64_t& h, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  hash_bytes(h, &bits, sizeof bits);
}

}  // namespace

std::uint64_t fixed_bindings_hash(const Model& model) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const auto& [name, values] : model.fixed_params) {
    hash_bytes(h, name.data(), name.size());
    hash_bytes(h, "\0", 1);
    for (double v : values) hash_double(h, v);
  }
  for (const auto& [name, value] : model.fixed_data) {
    hash_bytes(h, name.data(), name.size());
    hash_bytes(h, "\0", 1);
    hash_double(h, value);
  }
  return h;
}

}  // namespace pqc
