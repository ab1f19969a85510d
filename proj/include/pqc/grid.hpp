#pragma once

#include <cstddef>
#include <vector>

#include "pqc/gate.hpp"
#include "pqc/observable.hpp"

namespace pqc {

// Statevector batch: one column per grid point. Row j (amplitude index j)
// occupies ncols contiguous entries, so gate kernels stream along columns.
class GridState {
 public:
  GridState(int n, int ncols);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }
  int ncols() const { return ncols_; }

  cplx* row(std::size_t j) { return amp_.data() + j * ncols_; }
  const cplx* row(std::size_t j) const { return amp_.data() + j * ncols_; }

 private:
  int n_ = 0;
  int ncols_ = 0;
  std::vector<cplx> amp_;
};

// Per-column half-angle tables: c[j] = cos(angle_j / 2), s[j] = sin(...).
struct HalfAngles {
  std::vector<double> c, s;
};

HalfAngles half_angles(const std::vector<double>& angles);

// Single-qubit rotation with per-column angles.
void grid_rot_percol(GridState& st, int target, char axis,
                     const HalfAngles& ha);

// Single-qubit rotation, one angle for every column.
void grid_rot_const(GridState& st, int target, char axis, double angle);

// Multi-qubit Pauli-string rotation, per-column angles (cold path).
void grid_pauli_rot_percol(GridState& st, const Gate& gate,
                           const HalfAngles& ha);

// Any gate with a resolved (constant) slot.
void grid_apply_const(GridState& st, const Gate& gate);

// Observable value for every column.
std::vector<double> grid_evaluate(const GridState& st, const Observable& obs);

}  // namespace pqc
