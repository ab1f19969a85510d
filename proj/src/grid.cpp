#include "pqc/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "pqc/errors.hpp"
#include "pqc/kernels.hpp"
#include "pqc/state.hpp"

namespace pqc {

namespace {

int axis_index(char axis) {
  switch (axis) {
    case 'X':
      return 0;
    case 'Y':
      return 1;
    case 'Z':
      return 2;
    default:
      throw StructuralError(std::string("bad rotation axis '") + axis + "'");
  }
}

}  // namespace

GridState::GridState(int n, int ncols) : n_(n), ncols_(ncols) {
  if (n < 1 || n > kMaxQubits) {
    throw ConfigError("qubit count " + std::to_string(n) +
                      " outside supported range 1.." +
                      std::to_string(kMaxQubits));
  }
  if (ncols < 1) throw ConfigError("grid needs at least one column");
  amp_.assign((std::size_t{1} << n) * static_cast<std::size_t>(ncols),
              cplx(0.0, 0.0));
  std::fill(amp_.begin(), amp_.begin() + ncols, cplx(1.0, 0.0));
}

HalfAngles half_angles(const std::vector<double>& angles) {
  HalfAngles ha;
  ha.c.resize(angles.size());
  ha.s.resize(angles.size());
  for (std::size_t j = 0; j < angles.size(); ++j) {
    ha.c[j] = std::cos(angles[j] / 2);
    ha.s[j] = std::sin(angles[j] / 2);
  }
  return ha;
}

void grid_rot_percol(GridState& st, int target, char axis,
                     const HalfAngles& ha) {
  const int ax = axis_index(axis);
  const std::size_t dim = st.dim();
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t ncols = static_cast<std::size_t>(st.ncols());
  for (std::size_t base = 0; base < dim; base += tbit << 1) {
    for (std::size_t off = 0; off < tbit; ++off) {
      kern::rows_rot_percol(ax, st.row(base + off), st.row(base + off + tbit),
                            ncols, ha.c.data(), ha.s.data());
    }
  }
}

void grid_rot_const(GridState& st, int target, char axis, double angle) {
  const int ax = axis_index(axis);
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  const std::size_t dim = st.dim();
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t ncols = static_cast<std::size_t>(st.ncols());
  for (std::size_t base = 0; base < dim; base += tbit << 1) {
    for (std::size_t off = 0; off < tbit; ++off) {
      kern::rows_rot_const(ax, st.row(base + off), st.row(base + off + tbit),
                           ncols, c, s);
    }
  }
}

namespace {

struct StringMasks {
  std::uint64_t flip = 0;
  std::uint64_t phased = 0;
  int y_count = 0;
};

StringMasks masks_for(const Gate& gate) {
  StringMasks m;
  for (std::size_t i = 0; i < gate.pauli.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1}
                              << static_cast<unsigned>(gate.qubits[i]);
    switch (gate.pauli[i]) {
      case 'X':
        m.flip |= bit;
        break;
      case 'Y':
        m.flip |= bit;
        m.phased |= bit;
        ++m.y_count;
        break;
      default:
        m.phased |= bit;
        break;
    }
  }
  return m;
}

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

void grid_pauli_rot_percol(GridState& st, const Gate& gate,
                           const HalfAngles& ha) {
  const StringMasks m = masks_for(gate);
  const cplx unit = kIPow[m.y_count & 3];
  const std::size_t dim = st.dim();
  const std::size_t ncols = static_cast<std::size_t>(st.ncols());
  auto phase = [&](std::size_t k) -> cplx {
    return (std::popcount(k & m.phased) & 1) ? -unit : unit;
  };
  if (m.flip == 0) {
    for (std::size_t k = 0; k < dim; ++k) {
      const double sign = (std::popcount(k & m.phased) & 1) ? -1.0 : 1.0;
      cplx* r = st.row(k);
      for (std::size_t j = 0; j < ncols; ++j) {
        const double sr = ha.s[j] * sign;
        const double xr = r[j].real(), xi = r[j].imag();
        r[j] = cplx(ha.c[j] * xr + sr * xi, ha.c[j] * xi - sr * xr);
      }
    }
    return;
  }
  const int hb = 63 - std::countl_zero(m.flip);
  const std::size_t hbit = std::size_t{1} << hb;
  for (std::size_t k = 0; k < dim; ++k) {
    if (k & hbit) continue;
    const std::size_t p = k ^ m.flip;
    const cplx phk = phase(k), php = phase(p);
    cplx* rk = st.row(k);
    cplx* rp = st.row(p);
    for (std::size_t j = 0; j < ncols; ++j) {
      const cplx fk = cplx(0, -ha.s[j]) * php;
      const cplx fp = cplx(0, -ha.s[j]) * phk;
      const cplx xk = rk[j], xp = rp[j];
      rk[j] = ha.c[j] * xk + fk * xp;
      rp[j] = ha.c[j] * xp + fp * xk;
    }
  }
}

void grid_apply_const(GridState& st, const Gate& gate) {
  const std::size_t dim = st.dim();
  const std::size_t ncols = static_cast<std::size_t>(st.ncols());
  switch (gate.kind) {
    case Gate::Kind::pauli_rotation: {
      if (gate.slot.kind != Slot::Kind::constant) {
        throw BindingError("rotation gate has an unresolved slot");
      }
      if (gate.pauli.size() == 1) {
        grid_rot_const(st, gate.qubits[0], gate.pauli[0], gate.slot.angle);
        return;
      }
      const std::vector<double> one(1, gate.slot.angle);
      HalfAngles ha = half_angles(one);
      ha.c.assign(ncols, ha.c[0]);
      ha.s.assign(ncols, ha.s[0]);
      grid_pauli_rot_percol(st, gate, ha);
      return;
    }
    case Gate::Kind::hadamard: {
      const double h = 1.0 / std::sqrt(2.0);
      const cplx m[4] = {h, h, h, -h};
      const std::size_t tbit = std::size_t{1} << gate.qubits[0];
      for (std::size_t base = 0; base < dim; base += tbit << 1) {
        for (std::size_t off = 0; off < tbit; ++off) {
          kern::rows_apply_m(st.row(base + off), st.row(base + off + tbit),
                             ncols, m);
        }
      }
      return;
    }
    case Gate::Kind::cnot: {
      const std::size_t cbit = std::size_t{1} << gate.qubits[0];
      const std::size_t tbit = std::size_t{1} << gate.qubits[1];
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cbit) && !(i & tbit)) {
          std::swap_ranges(st.row(i), st.row(i) + ncols, st.row(i | tbit));
        }
      }
      return;
    }
    case Gate::Kind::fixed_unitary: {
      if (gate.qubits.size() == 1) {
        const std::size_t tbit = std::size_t{1} << gate.qubits[0];
        for (std::size_t base = 0; base < dim; base += tbit << 1) {
          for (std::size_t off = 0; off < tbit; ++off) {
            kern::rows_apply_m(st.row(base + off), st.row(base + off + tbit),
                               ncols, gate.matrix.data());
          }
        }
        return;
      }
      const std::size_t b0 = std::size_t{1} << gate.qubits[0];
      const std::size_t b1 = std::size_t{1} << gate.qubits[1];
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & (b0 | b1)) continue;
        cplx* rows[4] = {st.row(i), st.row(i | b0), st.row(i | b1),
                         st.row(i | b0 | b1)};
        for (std::size_t j = 0; j < ncols; ++j) {
          cplx x[4];
          for (int r = 0; r < 4; ++r) x[r] = rows[r][j];
          for (int r = 0; r < 4; ++r) {
            cplx acc = 0.0;
            for (int col = 0; col < 4; ++col) {
              acc += gate.matrix[static_cast<std::size_t>(r * 4 + col)] *
                     x[col];
            }
            rows[r][j] = acc;
          }
        }
      }
      return;
    }
  }
}

std::vector<double> grid_evaluate(const GridState& st, const Observable& obs) {
  const std::size_t dim = st.dim();
  const std::size_t ncols = static_cast<std::size_t>(st.ncols());
  std::vector<double> out(ncols, 0.0);
  if (obs.kind == Observable::Kind::projector) {
    if (obs.num_qubits() != st.num_qubits()) {
      throw StructuralError(
          "projector bitstring length must equal qubit count");
    }
    const cplx* r = st.row(projector_index(obs));
    for (std::size_t j = 0; j < ncols; ++j) {
      out[j] = r[j].real() * r[j].real() + r[j].imag() * r[j].imag();
    }
    return out;
  }
  if (obs.num_qubits() > st.num_qubits()) {
    throw StructuralError("observable acts on more qubits than the state has");
  }
  StringMasks m;
  for (std::size_t q = 0; q < obs.paulis.size(); ++q) {
    switch (obs.paulis[q]) {
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
  if (m.flip == 0) {
    for (std::size_t k = 0; k < dim; ++k) {
      const double sign = (std::popcount(k & m.phased) & 1) ? -1.0 : 1.0;
      const cplx* r = st.row(k);
      for (std::size_t j = 0; j < ncols; ++j) {
        out[j] += sign * (r[j].real() * r[j].real() + r[j].imag() * r[j].imag());
      }
    }
    return out;
  }
  const cplx unit = kIPow[m.y_count & 3];
  std::vector<cplx> acc(ncols, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < dim; ++k) {
    const std::size_t p = k ^ m.flip;
    const bool neg = std::popcount(p & m.phased) & 1;
    const cplx ph = neg ? -unit : unit;
    const cplx* rk = st.row(k);
    const cplx* rp = st.row(p);
    for (std::size_t j = 0; j < ncols; ++j) {
      acc[j] += std::conj(rk[j]) * ph * rp[j];
    }
  }
  for (std::size_t j = 0; j < ncols; ++j) {
    if (std::abs(acc[j].imag()) > 1e-10) {
      throw Error("Pauli expectation has non-real residue " +
                  std::to_string(acc[j].imag()));
    }
    out[j] = acc[j].real();
  }
  return out;
}

}  // namespace pqc
