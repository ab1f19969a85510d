#include "pqc/observable.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <utility>

#include "pqc/errors.hpp"

namespace pqc {

Observable Observable::pauli_string(std::string paulis) {
  if (paulis.empty()) throw StructuralError("empty Pauli string");
  for (char c : paulis) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw StructuralError(std::string("bad Pauli factor '") + c + "'");
    }
  }
  Observable o;
  o.kind = Kind::pauli_string;
  o.paulis = std::move(paulis);
  return o;
}

Observable Observable::projector(std::string bits) {
  if (bits.empty()) throw StructuralError("empty projector bitstring");
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw StructuralError("projector bitstring must be over {0,1}");
    }
  }
  Observable o;
  o.kind = Kind::projector;
  o.bits = std::move(bits);
  return o;
}

Observable Observable::all_z(int n) {
  return pauli_string(std::string(static_cast<std::size_t>(n), 'Z'));
}

OutputType parse_output_type(const std::string& s) {
  if (s == "expectation") return OutputType::expectation;
  if (s == "probability") return OutputType::probability;
  throw ConfigError("output type must be expectation or probability (got '" +
                    s + "')");
}

std::string to_string(OutputType t) {
  return t == OutputType::expectation ? "expectation" : "probability";
}

namespace {

struct PauliMasks {
  std::uint64_t flip = 0;    // X or Y factors
  std::uint64_t phased = 0;  // Y or Z factors
  int y_count = 0;
};

PauliMasks masks_of(const std::string& paulis) {
  PauliMasks m;
  for (std::size_t q = 0; q < paulis.size(); ++q) {
    switch (paulis[q]) {
      case 'X':
        m.flip |= std::uint64_t{1} << q;
        break;
      case 'Y':
        m.flip |= std::uint64_t{1} << q;
        m.phased |= std::uint64_t{1} << q;
        ++m.y_count;
        break;
      case 'Z':
        m.phased |= std::uint64_t{1} << q;
        break;
      default:
        break;
    }
  }
  return m;
}

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

double expectation(const Statevector& state, const Observable& obs) {
  if (obs.kind != Observable::Kind::pauli_string) {
    throw StructuralError("expectation needs a Pauli-string observable");
  }
  if (obs.num_qubits() > state.num_qubits()) {
    throw StructuralError("observable acts on more qubits than the state has");
  }
  const PauliMasks m = masks_of(obs.paulis);
  const cplx unit = kIPow[m.y_count & 3];
  const cplx* a = state.data();
  const std::size_t dim = state.dim();
  if (m.flip == 0) {
    double acc = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double sign = (std::popcount(k & m.phased) & 1) ? -1.0 : 1.0;
      acc += sign * (a[k].real() * a[k].real() + a[k].imag() * a[k].imag());
    }
    return acc;
  }
  cplx acc = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t p = k ^ m.flip;
    const bool neg = std::popcount(p & m.phased) & 1;
    const cplx ph = neg ? -unit : unit;
    acc += std::conj(a[k]) * ph * a[p];
  }
  if (std::abs(acc.imag()) > 1e-10) {
    throw Error("Pauli expectation has non-real residue " +
                std::to_string(acc.imag()));
  }
  return acc.real();
}

std::size_t projector_index(const Observable& obs) {
  std::size_t idx = 0;
  for (std::size_t q = 0; q < obs.bits.size(); ++q) {
    if (obs.bits[q] == '1') idx |= std::size_t{1} << q;
  }
  return idx;
}

double probability(const Statevector& state, const Observable& obs) {
  if (obs.kind != Observable::Kind::projector) {
    throw StructuralError("probability needs a projector observable");
  }
  if (obs.num_qubits() != state.num_qubits()) {
    throw StructuralError("projector bitstring length must equal qubit count");
  }
  const cplx a = state[projector_index(obs)];
  return a.real() * a.real() + a.imag() * a.imag();
}

double evaluate(const Statevector& state, const Observable& obs) {
  return obs.kind == Observable::Kind::pauli_string ? expectation(state, obs)
                                                    : probability(state, obs);
}

Observable default_observable(int n, OutputType t) {
  if (t == OutputType::expectation) return Observable::all_z(n);
  return Observable::projector(std::string(static_cast<std::size_t>(n), '0'));
}

double two_design_sum_sq(int n, OutputType t) {
  const double d = static_cast<double>(std::uint64_t{1} << n);
  if (t == OutputType::expectation) return 1.0 / (d + 1.0);
  return 1.0 / ((d / 2.0) * (d + 1.0));
}

}  // namespace pqc
