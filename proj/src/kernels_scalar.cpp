#include <bit>
#include <cstdint>

#include "pqc/kernels.hpp"

#include "kernels_impl.hpp"

namespace pqc::kern {

// Reference kernels. The AVX2 variants execute the same IEEE operation
// sequences; the library is built with -ffp-contract=off so both sides stay
// bit-identical and equivalence tests can compare exactly.

namespace scalar {

void apply_1q(cplx* amp, std::size_t dim, int target, const cplx m[4]) {
  const std::size_t tbit = std::size_t{1} << target;
  const double m00r = m[0].real(), m00i = m[0].imag();
  const double m01r = m[1].real(), m01i = m[1].imag();
  const double m10r = m[2].real(), m10i = m[2].imag();
  const double m11r = m[3].real(), m11i = m[3].imag();
  for (std::size_t base = 0; base < dim; base += tbit << 1) {
    for (std::size_t off = 0; off < tbit; ++off) {
      cplx& a0 = amp[base + off];
      cplx& a1 = amp[base + off + tbit];
      const double x0r = a0.real(), x0i = a0.imag();
      const double x1r = a1.real(), x1i = a1.imag();
      a0 = cplx((x0r * m00r - x0i * m00i) + (x1r * m01r - x1i * m01i),
                (x0i * m00r + x0r * m00i) + (x1i * m01r + x1r * m01i));
      a1 = cplx((x0r * m10r - x0i * m10i) + (x1r * m11r - x1i * m11i),
                (x0i * m10r + x0r * m10i) + (x1i * m11r + x1r * m11i));
    }
  }
}

void rows_rot_const(int axis, cplx* r0, cplx* r1, std::size_t ncols, double c,
                    double s) {
  for (std::size_t j = 0; j < ncols; ++j) {
    rot_pair(axis, r0[j], r1[j], c, s);
  }
}

void rows_rot_percol(int axis, cplx* r0, cplx* r1, std::size_t ncols,
                     const double* c, const double* s) {
  for (std::size_t j = 0; j < ncols; ++j) {
    rot_pair(axis, r0[j], r1[j], c[j], s[j]);
  }
}

void rows_apply_m(cplx* r0, cplx* r1, std::size_t ncols, const cplx m[4]) {
  const double m00r = m[0].real(), m00i = m[0].imag();
  const double m01r = m[1].real(), m01i = m[1].imag();
  const double m10r = m[2].real(), m10i = m[2].imag();
  const double m11r = m[3].real(), m11i = m[3].imag();
  for (std::size_t j = 0; j < ncols; ++j) {
    const double x0r = r0[j].real(), x0i = r0[j].imag();
    const double x1r = r1[j].real(), x1i = r1[j].imag();
    r0[j] = cplx((x0r * m00r - x0i * m00i) + (x1r * m01r - x1i * m01i),
                 (x0i * m00r + x0r * m00i) + (x1i * m01r + x1r * m01i));
    r1[j] = cplx((x0r * m10r - x0i * m10i) + (x1r * m11r - x1i * m11i),
                 (x0i * m10r + x0r * m10i) + (x1i * m11r + x1r * m11i));
  }
}

}  // namespace scalar

// --- Non-dispatched kernels (memory permutations and cold paths) ------------

void apply_cnot(cplx* amp, std::size_t dim, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amp[i], amp[i | tbit]);
    }
  }
}

void apply_2q(cplx* amp, std::size_t dim, int q0, int q1, const cplx m[16]) {
  const std::size_t b0 = std::size_t{1} << q0;
  const std::size_t b1 = std::size_t{1} << q1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & (b0 | b1)) continue;
    const std::size_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
    cplx x[4];
    for (int r = 0; r < 4; ++r) x[r] = amp[idx[r]];
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0.0;
      for (int col = 0; col < 4; ++col) acc += m[r * 4 + col] * x[col];
      amp[idx[r]] = acc;
    }
  }
}

void apply_pauli_rot(cplx* amp, std::size_t dim, std::uint64_t flip,
                     std::uint64_t phased, int i_pow, double c, double s) {
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx unit = kIPow[i_pow & 3];
  auto phase = [&](std::size_t k) -> cplx {
    const bool neg = std::popcount(k & phased) & 1;
    return neg ? -unit : unit;
  };
  if (flip == 0) {
    // Diagonal string (I/Z only): amplitude k picks up e^{-i*angle*sign/2}.
    for (std::size_t k = 0; k < dim; ++k) {
      const double sign = (std::popcount(k & phased) & 1) ? -1.0 : 1.0;
      const double sr = s * sign;
      const double xr = amp[k].real(), xi = amp[k].imag();
      amp[k] = cplx(c * xr + sr * xi, c * xi - sr * xr);
    }
    return;
  }
  const int hb = 63 - std::countl_zero(flip);
  const std::size_t hbit = std::size_t{1} << hb;
  for (std::size_t k = 0; k < dim; ++k) {
    if (k & hbit) continue;
    const std::size_t p = k ^ flip;
    const cplx fk = cplx(0, -s) * phase(p);  // y_k += fk * x_p
    const cplx fp = cplx(0, -s) * phase(k);  // y_p += fp * x_k
    const cplx xk = amp[k], xp = amp[p];
    amp[k] = c * xk + fk * xp;
    amp[p] = c * xp + fp * xk;
  }
}

}  // namespace pqc::kern
