#include "pqc/circuit.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "pqc/errors.hpp"

namespace pqc {

namespace {

void check_qubits(const Gate& g, int n) {
  for (int q : g.qubits) {
    if (q < 0 || q >= n) {
      throw StructuralError("gate qubit " + std::to_string(q) +
                            " out of range for " + std::to_string(n) +
                            " qubits");
    }
  }
}

}  // namespace

void CircuitTemplate::validate() const {
  if (n < 1 || n > kMaxQubits) {
    throw ConfigError("qubit count " + std::to_string(n) +
                      " outside supported range 1.." +
                      std::to_string(kMaxQubits));
  }
  for (const Gate& g : gates) {
    check_qubits(g, n);
    if (g.kind != Gate::Kind::pauli_rotation) continue;
    switch (g.slot.kind) {
      case Slot::Kind::parameter: {
        const Block* b = find_block(g.slot.block);
        if (b == nullptr) {
          throw StructuralError("slot references undeclared block '" +
                                g.slot.block + "'");
        }
        if (g.slot.index < 0 || g.slot.index >= b->dim) {
          throw StructuralError(
              "slot index " + std::to_string(g.slot.index) +
              " outside block '" + g.slot.block + "' of dimension " +
              std::to_string(b->dim));
        }
        break;
      }
      case Slot::Kind::data: {
        bool found = false;
        for (const std::string& v : data_vars) found |= (v == g.slot.var);
        if (!found) {
          throw StructuralError("slot references undeclared data variable '" +
                                g.slot.var + "'");
        }
        break;
      }
      case Slot::Kind::constant:
        break;
    }
  }
}

int CircuitTemplate::param_count() const {
  int total = 0;
  for (const Block& b : blocks) total += b.dim;
  return total;
}

const Block* CircuitTemplate::find_block(const std::string& name) const {
  for (const Block& b : blocks) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

int CircuitTemplate::flat_index(const std::string& block, int index) const {
  int offset = 0;
  for (const Block& b : blocks) {
    if (b.name == block) {
      if (index < 0 || index >= b.dim) {
        throw BindingError("index " + std::to_string(index) +
                           " outside block '" + block + "'");
      }
      return offset + index;
    }
    offset += b.dim;
  }
  throw BindingError("unknown block '" + block + "'");
}

BoundCircuit bind(const CircuitTemplate& tmpl, const ParamMap& params,
                  const DataMap& data) {
  for (const Block& b : tmpl.blocks) {
    auto it = params.find(b.name);
    if (it == params.end()) {
      throw BindingError("missing parameter block '" + b.name + "'");
    }
    if (static_cast<int>(it->second.size()) != b.dim) {
      throw BindingError("block '" + b.name + "' expects " +
                         std::to_string(b.dim) + " values, got " +
                         std::to_string(it->second.size()));
    }
  }
  for (const std::string& v : tmpl.data_vars) {
    if (!data.contains(v)) {
      throw BindingError("missing data variable '" + v + "'");
    }
  }
  BoundCircuit out;
  out.n = tmpl.n;
  out.gates.reserve(tmpl.gates.size());
  for (const Gate& g : tmpl.gates) {
    Gate r = g;
    if (g.kind == Gate::Kind::pauli_rotation) {
      switch (g.slot.kind) {
        case Slot::Kind::parameter:
          r.slot = Slot::constant(
              params.at(g.slot.block)[static_cast<std::size_t>(g.slot.index)]);
          break;
        case Slot::Kind::data:
          r.slot = Slot::constant(data.at(g.slot.var));
          break;
        case Slot::Kind::constant:
          break;
      }
    }
    out.gates.push_back(std::move(r));
  }
  return out;
}

BoundCircuit bind_flat(const CircuitTemplate& tmpl,
                       const std::vector<double>& theta, const DataMap& data) {
  if (static_cast<int>(theta.size()) != tmpl.param_count()) {
    throw BindingError("flat parameter vector has " +
                       std::to_string(theta.size()) + " entries, template has " +
                       std::to_string(tmpl.param_count()));
  }
  ParamMap params;
  std::size_t offset = 0;
  for (const Block& b : tmpl.blocks) {
    params[b.name] = std::vector<double>(
        theta.begin() + static_cast<std::ptrdiff_t>(offset),
        theta.begin() + static_cast<std::ptrdiff_t>(offset + b.dim));
    offset += static_cast<std::size_t>(b.dim);
  }
  return bind(tmpl, params, data);
}

void apply_gate_inplace(Statevector& state, const Gate& gate) {
  check_qubits(gate, state.num_qubits());
  cplx* amp = state.data();
  const std::size_t dim = state.dim();
  switch (gate.kind) {
    case Gate::Kind::pauli_rotation: {
      if (gate.slot.kind != Slot::Kind::constant) {
        throw BindingError("rotation gate has an unresolved slot");
      }
      if (gate.pauli.size() == 1) {
        cplx m[4];
        rotation_matrix(gate.pauli[0], gate.slot.angle, m);
        kern::apply_1q(amp, dim, gate.qubits[0], m);
        return;
      }
      std::uint64_t flip = 0, phased = 0;
      int y_count = 0;
      for (std::size_t i = 0; i < gate.pauli.size(); ++i) {
        const std::uint64_t bit = std::uint64_t{1}
                                  << static_cast<unsigned>(gate.qubits[i]);
        switch (gate.pauli[i]) {
          case 'X':
            flip |= bit;
            break;
          case 'Y':
            flip |= bit;
            phased |= bit;
            ++y_count;
            break;
          default:
            phased |= bit;
            break;
        }
      }
      kern::apply_pauli_rot(amp, dim, flip, phased, y_count,
                            std::cos(gate.slot.angle / 2),
                            std::sin(gate.slot.angle / 2));
      return;
    }
    case Gate::Kind::hadamard: {
      const double h = 1.0 / std::sqrt(2.0);
      const cplx m[4] = {h, h, h, -h};
      kern::apply_1q(amp, dim, gate.qubits[0], m);
      return;
    }
    case Gate::Kind::cnot:
      kern::apply_cnot(amp, dim, gate.qubits[0], gate.qubits[1]);
      return;
    case Gate::Kind::fixed_unitary:
      if (gate.qubits.size() == 1) {
        kern::apply_1q(amp, dim, gate.qubits[0], gate.matrix.data());
      } else {
        kern::apply_2q(amp, dim, gate.qubits[0], gate.qubits[1],
                       gate.matrix.data());
      }
      return;
  }
}

Statevector apply_gate(const Statevector& state, const Gate& gate) {
  Statevector out = state;
  apply_gate_inplace(out, gate);
  return out;
}

Statevector run(const BoundCircuit& circuit) {
  return run(circuit, zero_state(circuit.n));
}

Statevector run(const BoundCircuit& circuit, Statevector initial) {
  if (initial.num_qubits() != circuit.n) {
    throw StructuralError("initial state qubit count differs from circuit");
  }
  for (const Gate& g : circuit.gates) {
    apply_gate_inplace(initial, g);
  }
  return initial;
}

}  // namespace pqc
