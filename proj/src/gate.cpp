#include "pqc/gate.hpp"

#include <cmath>
#include <utility>

#include "pqc/errors.hpp"

namespace pqc {

Axis parse_axis(const std::string& s) {
  if (s == "x" || s == "X") return Axis::x;
  if (s == "y" || s == "Y") return Axis::y;
  if (s == "z" || s == "Z") return Axis::z;
  if (s == "cycle") return Axis::cycle;
  throw ConfigError("axis must be x, y, z, or cycle (got '" + s + "')");
}

Entangler parse_entangler(const std::string& s) {
  if (s == "chain") return Entangler::chain;
  if (s == "ring") return Entangler::ring;
  if (s == "brick") return Entangler::brick;
  throw ConfigError("entangler must be chain, ring, or brick (got '" + s +
                    "')");
}

std::string to_string(Axis a) {
  switch (a) {
    case Axis::x:
      return "x";
    case Axis::y:
      return "y";
    case Axis::z:
      return "z";
    case Axis::cycle:
      return "cycle";
  }
  return "?";
}

std::string to_string(Entangler e) {
  switch (e) {
    case Entangler::chain:
      return "chain";
    case Entangler::ring:
      return "ring";
    case Entangler::brick:
      return "brick";
  }
  return "?";
}

Slot Slot::constant(double a) {
  Slot s;
  s.kind = Kind::constant;
  s.angle = a;
  return s;
}

Slot Slot::parameter(std::string block, int index) {
  Slot s;
  s.kind = Kind::parameter;
  s.block = std::move(block);
  s.index = index;
  return s;
}

Slot Slot::data(std::string var) {
  Slot s;
  s.kind = Kind::data;
  s.var = std::move(var);
  return s;
}

namespace {

void check_pauli(const std::string& pauli, const std::vector<int>& qubits) {
  if (pauli.empty() || pauli.size() != qubits.size()) {
    throw StructuralError("rotation needs one axis character per qubit");
  }
  for (char c : pauli) {
    if (c != 'X' && c != 'Y' && c != 'Z') {
      throw StructuralError(std::string("bad rotation axis '") + c + "'");
    }
  }
}

void check_unitary(const std::vector<cplx>& m, int d) {
  // Columns must be orthonormal within 1e-12.
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      cplx acc = 0.0;
      for (int r = 0; r < d; ++r) {
        acc += std::conj(m[r * d + a]) * m[r * d + b];
      }
      const double want = (a == b) ? 1.0 : 0.0;
      if (std::abs(acc - want) > 1e-12) {
        throw StructuralError("fixed gate matrix is not unitary");
      }
    }
  }
}

}  // namespace

Gate Gate::rotation(std::string pauli, std::vector<int> qubits, Slot slot) {
  check_pauli(pauli, qubits);
  Gate g;
  g.kind = Kind::pauli_rotation;
  g.pauli = std::move(pauli);
  g.qubits = std::move(qubits);
  g.slot = std::move(slot);
  return g;
}

Gate Gate::rotation(char axis, int qubit, Slot slot) {
  return rotation(std::string(1, axis), {qubit}, std::move(slot));
}

Gate Gate::hadamard(int qubit) {
  Gate g;
  g.kind = Kind::hadamard;
  g.qubits = {qubit};
  return g;
}

Gate Gate::cnot(int control, int target) {
  if (control == target) {
    throw StructuralError("cnot control and target must differ");
  }
  Gate g;
  g.kind = Kind::cnot;
  g.qubits = {control, target};
  return g;
}

Gate Gate::unitary1(int qubit, const std::vector<cplx>& m) {
  if (m.size() != 4) throw StructuralError("1-qubit fixed gate needs a 2x2 matrix");
  check_unitary(m, 2);
  Gate g;
  g.kind = Kind::fixed_unitary;
  g.qubits = {qubit};
  g.matrix = m;
  return g;
}

Gate Gate::unitary2(int q0, int q1, const std::vector<cplx>& m) {
  if (m.size() != 16) throw StructuralError("2-qubit fixed gate needs a 4x4 matrix");
  if (q0 == q1) throw StructuralError("2-qubit gate qubits must differ");
  check_unitary(m, 4);
  Gate g;
  g.kind = Kind::fixed_unitary;
  g.qubits = {q0, q1};
  g.matrix = m;
  return g;
}

void rotation_matrix(char axis, double angle, cplx out[4]) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  switch (axis) {
    case 'X':
      out[0] = c;
      out[1] = cplx(0, -s);
      out[2] = cplx(0, -s);
      out[3] = c;
      break;
    case 'Y':
      out[0] = c;
      out[1] = -s;
      out[2] = s;
      out[3] = c;
      break;
    case 'Z':
      out[0] = cplx(c, -s);
      out[1] = 0.0;
      out[2] = 0.0;
      out[3] = cplx(c, s);
      break;
    default:
      throw StructuralError(std::string("bad rotation axis '") + axis + "'");
  }
}

}  // namespace pqc
