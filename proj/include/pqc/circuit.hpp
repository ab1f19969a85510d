#pragma once

#include <map>
#include <string>
#include <vector>

#include "pqc/gate.hpp"
#include "pqc/observable.hpp"
#include "pqc/state.hpp"

namespace pqc {

struct Block {
  std::string name;
  int dim = 0;
  bool operator==(const Block&) const = default;
};

// A circuit with unresolved parameter/data slots.
struct CircuitTemplate {
  int n = 0;
  std::vector<Gate> gates;
  std::vector<Block> blocks;
  std::vector<std::string> data_vars;

  // Checks qubit ranges and that every slot references a declared block
  // (index within its dimension) or data variable.
  void validate() const;

  int param_count() const;
  const Block* find_block(const std::string& name) const;

  // Flat parameter-vector layout: blocks in declaration order, indices in
  // order within each block. Returns the flat offset of (block, index).
  int flat_index(const std::string& block, int index) const;
};

using ParamMap = std::map<std::string, std::vector<double>>;
using DataMap = std::map<std::string, double>;

// A circuit whose slots are all resolved to concrete angles.
struct BoundCircuit {
  int n = 0;
  std::vector<Gate> gates;  // every slot has Kind::constant
};

// Resolves every slot; missing blocks/variables or dimension mismatches
// raise BindingError naming the offender.
BoundCircuit bind(const CircuitTemplate& tmpl, const ParamMap& params,
                  const DataMap& data = {});

// Convenience: flat parameter vector in flat_index order.
BoundCircuit bind_flat(const CircuitTemplate& tmpl,
                       const std::vector<double>& theta,
                       const DataMap& data = {});

// Applies one resolved gate in place.
void apply_gate_inplace(Statevector& state, const Gate& gate);

// Value-style variant: returns the transformed state.
Statevector apply_gate(const Statevector& state, const Gate& gate);

// Runs the circuit from |0...0>.
Statevector run(const BoundCircuit& circuit);

// Runs the circuit from a caller-supplied initial state.
Statevector run(const BoundCircuit& circuit, Statevector initial);

}  // namespace pqc
