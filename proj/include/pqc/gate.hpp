#pragma once

#include <string>
#include <vector>

#include "pqc/kernels.hpp"

namespace pqc {

// Rotation-axis knob for the layered templates. x/y/z use that axis
// everywhere; cycle assigns axis (qubit + layer) mod 3 over X, Y, Z, which
// keeps the generated ensemble away from the real-matrix and phase-diagonal
// degeneracies a fixed axis produces.
enum class Axis { x, y, z, cycle };

// Entangler layout per layer. chain: CNOT(0,1),(1,2),...,(n-2,n-1).
// ring: chain plus CNOT(n-1,0). brick: even pairs (0,1),(2,3),... then odd
// pairs (1,2),(3,4),...
enum class Entangler { chain, ring, brick };

Axis parse_axis(const std::string& s);
Entangler parse_entangler(const std::string& s);
std::string to_string(Axis a);
std::string to_string(Entangler e);

// An angle source for a parameterized gate.
struct Slot {
  enum class Kind { constant, parameter, data };

  Kind kind = Kind::constant;
  double angle = 0.0;       // constant
  std::string block;        // parameter
  int index = 0;            // parameter
  std::string var;          // data

  static Slot constant(double a);
  static Slot parameter(std::string block, int index);
  static Slot data(std::string var);

  bool operator==(const Slot&) const = default;
};

struct Gate {
  enum class Kind { pauli_rotation, hadamard, cnot, fixed_unitary };

  Kind kind = Kind::pauli_rotation;
  // pauli_rotation: pauli[i] in {X,Y,Z} acts on qubits[i];
  // exp(-i * angle * P / 2).
  std::string pauli;
  std::vector<int> qubits;
  Slot slot;
  // fixed_unitary: row-major 2x2 (4 entries, 1 qubit) or 4x4 (16 entries,
  // 2 qubits; basis index is (bit of qubits[1]) << 1 | (bit of qubits[0])).
  std::vector<cplx> matrix;

  static Gate rotation(std::string pauli, std::vector<int> qubits, Slot slot);
  static Gate rotation(char axis, int qubit, Slot slot);
  static Gate hadamard(int qubit);
  static Gate cnot(int control, int target);
  static Gate unitary1(int qubit, const std::vector<cplx>& m);
  static Gate unitary2(int q0, int q1, const std::vector<cplx>& m);

  bool is_parameterized() const { return kind == Kind::pauli_rotation; }
};

// 2x2 matrix of exp(-i*angle*A/2) for axis character A in {X,Y,Z},
// row-major.
void rotation_matrix(char axis, double angle, cplx out[4]);

}  // namespace pqc
