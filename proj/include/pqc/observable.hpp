#pragma once

#include <string>

#include "pqc/state.hpp"

namespace pqc {

// Either a Pauli-string expectation (result in [-1, 1]) or a basis-state
// projector probability (result in [0, 1]).
struct Observable {
  enum class Kind { pauli_string, projector };

  Kind kind = Kind::pauli_string;
  // pauli_string: paulis[q] in {I,X,Y,Z} is the factor on qubit q.
  std::string paulis;
  // projector: bits[q] in {0,1} is the measured value of qubit q.
  std::string bits;

  static Observable pauli_string(std::string paulis);
  static Observable projector(std::string bits);
  static Observable all_z(int n);

  int num_qubits() const {
    return static_cast<int>(kind == Kind::pauli_string ? paulis.size()
                                                       : bits.size());
  }
};

enum class OutputType { expectation, probability };
OutputType parse_output_type(const std::string& s);
std::string to_string(OutputType t);

// <psi|P|psi> for a Pauli string; the imaginary residue must be below 1e-10
// (checked) and is discarded.
double expectation(const Statevector& state, const Observable& obs);

// |<b|psi>|^2 for a projector.
double probability(const Statevector& state, const Observable& obs);

// Amplitude index selected by a projector's bitstring.
std::size_t projector_index(const Observable& obs);

// Dispatches on the observable kind.
double evaluate(const Statevector& state, const Observable& obs);

// Observable matching the output type: Z on every qubit, or the |0...0>
// projector.
Observable default_observable(int n, OutputType t);

// Second moment of the output under a 2-design ensemble: 1/(2^n+1) for the
// all-Z expectation, 1/(2^{n-1} (2^n+1)) for a basis-state probability.
double two_design_sum_sq(int n, OutputType t);

}  // namespace pqc
