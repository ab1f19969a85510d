#pragma once

#include "pqc/kernels.hpp"

// Internal. The operation order in rot_pair is the contract every kernel
// variant reproduces; SIMD remainder lanes call it directly.

namespace pqc::kern {

inline void rot_pair(int axis, cplx& a0, cplx& a1, double c, double s) {
  const double x0r = a0.real(), x0i = a0.imag();
  const double x1r = a1.real(), x1i = a1.imag();
  switch (axis) {
    case 0:  // X: y0 = c*x0 - i*s*x1, y1 = -i*s*x0 + c*x1
      a0 = cplx(c * x0r + s * x1i, c * x0i - s * x1r);
      a1 = cplx(c * x1r + s * x0i, c * x1i - s * x0r);
      break;
    case 1:  // Y: y0 = c*x0 - s*x1, y1 = s*x0 + c*x1
      a0 = cplx(c * x0r - s * x1r, c * x0i - s * x1i);
      a1 = cplx(s * x0r + c * x1r, s * x0i + c * x1i);
      break;
    default:  // Z: y0 = (c - i*s)*x0, y1 = (c + i*s)*x1
      a0 = cplx(c * x0r + s * x0i, c * x0i - s * x0r);
      a1 = cplx(c * x1r - s * x1i, c * x1i + s * x1r);
      break;
  }
}

struct KernelTable {
  void (*apply_1q)(cplx*, std::size_t, int, const cplx[4]);
  void (*rows_rot_const)(int, cplx*, cplx*, std::size_t, double, double);
  void (*rows_rot_percol)(int, cplx*, cplx*, std::size_t, const double*,
                          const double*);
  void (*rows_apply_m)(cplx*, cplx*, std::size_t, const cplx[4]);
};

namespace scalar {
void apply_1q(cplx* amp, std::size_t dim, int target, const cplx m[4]);
void rows_rot_const(int axis, cplx* r0, cplx* r1, std::size_t ncols, double c,
                    double s);
void rows_rot_percol(int axis, cplx* r0, cplx* r1, std::size_t ncols,
                     const double* c, const double* s);
void rows_apply_m(cplx* r0, cplx* r1, std::size_t ncols, const cplx m[4]);
}  // namespace scalar

#if defined(PQC_HAVE_AVX2)
namespace avx2 {
void apply_1q(cplx* amp, std::size_t dim, int target, const cplx m[4]);
void rows_rot_const(int axis, cplx* r0, cplx* r1, std::size_t ncols, double c,
                    double s);
void rows_rot_percol(int axis, cplx* r0, cplx* r1, std::size_t ncols,
                     const double* c, const double* s);
void rows_apply_m(cplx* r0, cplx* r1, std::size_t ncols, const cplx m[4]);
}  // namespace avx2
#endif

}  // namespace pqc::kern
