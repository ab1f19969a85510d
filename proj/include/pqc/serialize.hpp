#pragma once

#include <string>

#include "pqc/circuit.hpp"

namespace pqc {

// JSON schema:
//   {
//     "n": 2,
//     "gates": [
//       {"kind": "rotation", "pauli": "Y", "qubits": [0],
//        "slot": {"type": "parameter", "block": "b0", "index": 0}},
//       {"kind": "cnot", "qubits": [0, 1]},
//       {"kind": "hadamard", "qubits": [0]},
//       {"kind": "unitary", "qubits": [0], "matrix": [[re, im], ...]}
//     ],
//     "blocks": [{"name": "b0", "dim": 2}],
//     "data_vars": ["x"]
//   }
// Slot types: {"type":"constant","angle":a}, {"type":"parameter","block":b,
// "index":i}, {"type":"data","var":v}. Omitted slot means constant 0.
std::string template_to_json(const CircuitTemplate& tmpl, int indent = 2);

// Parses and validates a template; malformed documents raise ConfigError
// naming the offending field.
CircuitTemplate template_from_json(const std::string& text);

CircuitTemplate load_template(const std::string& path);

}  // namespace pqc
