#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pqc {

using cplx = std::complex<double>;

namespace kern {

enum class Isa { scalar, avx2 };

// Currently selected kernel set. Resolution order: PQC_SIMD environment
// variable (scalar|avx2|auto), then CPU capability, then scalar.
Isa active();
bool supported(Isa isa);
// Force a kernel set (tests use this to cross-check variants). Throws
// ConfigError if the requested set is unsupported on this machine.
void force(Isa isa);
std::string_view name(Isa isa);

// --- Single-statevector kernels -------------------------------------------
// amp is a length-dim array; dim is a power of two; target is a bit index.

// Apply a 2x2 matrix m (row-major: m00 m01 m10 m11) to the target qubit.
void apply_1q(cplx* amp, std::size_t dim, int target, const cplx m[4]);

// Swap |...1c...0t...> and |...1c...1t...> amplitude pairs.
void apply_cnot(cplx* amp, std::size_t dim, int control, int target);

// Apply a 4x4 matrix (row-major over basis |q1 q0>) to qubits (q0, q1).
void apply_2q(cplx* amp, std::size_t dim, int q0, int q1, const cplx m[16]);

// exp(-i*angle*P/2) for a Pauli string P described by masks:
//   flip   = qubits where P acts as X or Y (bit flips),
//   phased = qubits where P acts as Y or Z (sign from the bit),
//   i_pow  = number of Y factors mod 4 (global i^i_pow on the flip part).
// c = cos(angle/2), s = sin(angle/2).
void apply_pauli_rot(cplx* amp, std::size_t dim, std::uint64_t flip,
                     std::uint64_t phased, int i_pow, double c, double s);

// --- Row-batch kernels ------------------------------------------------------
// The grid evaluator stores one amplitude row per basis index, ncols
// contiguous columns (one per grid point). r0/r1 are the two rows an
// amplitude pair occupies.

// 0 = X, 1 = Y, 2 = Z rotation; same angle for every column.
void rows_rot_const(int axis, cplx* r0, cplx* r1, std::size_t ncols, double c,
                    double s);

// Per-column angles: c[j] = cos(x_j/2), s[j] = sin(x_j/2).
void rows_rot_percol(int axis, cplx* r0, cplx* r1, std::size_t ncols,
                     const double* c, const double* s);

// Apply a constant 2x2 matrix across all columns of a row pair.
void rows_apply_m(cplx* r0, cplx* r1, std::size_t ncols, const cplx m[4]);

}  // namespace kern
}  // namespace pqc
