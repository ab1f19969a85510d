#if defined(PQC_HAVE_AVX2)

#include <immintrin.h>

#include "pqc/kernels.hpp"

#include "kernels_impl.hpp"

namespace pqc::kern::avx2 {

namespace {

// (zr*wr - zi*wi, zi*wr + zr*wi) for two complex lanes.
inline __m256d cmul(__m256d z, __m256d wre, __m256d wim) {
  const __m256d t0 = _mm256_mul_pd(z, wre);
  const __m256d zs = _mm256_permute_pd(z, 0x5);
  const __m256d t1 = _mm256_mul_pd(zs, wim);
  return _mm256_addsub_pd(t0, t1);
}

// [v0, v1] -> [v0, v0, v1, v1]
inline __m256d dup_pair(const double* v) {
  const __m128d p = _mm_loadu_pd(v);
  return _mm256_permute4x64_pd(_mm256_castpd128_pd256(p), 0x50);
}

}  // namespace

void apply_1q(cplx* amp, std::size_t dim, int target, const cplx m[4]) {
  double* p = reinterpret_cast<double*>(amp);
  if (target == 0) {
    // Amplitude pairs are adjacent: one pair per 256-bit vector.
    const __m256d wre_a =
        _mm256_set_pd(m[2].real(), m[2].real(), m[0].real(), m[0].real());
    const __m256d wim_a =
        _mm256_set_pd(m[2].imag(), m[2].imag(), m[0].imag(), m[0].imag());
    const __m256d wre_b =
        _mm256_set_pd(m[3].real(), m[3].real(), m[1].real(), m[1].real());
    const __m256d wim_b =
        _mm256_set_pd(m[3].imag(), m[3].imag(), m[1].imag(), m[1].imag());
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d z = _mm256_loadu_pd(p + 2 * i);
      const __m256d zlo = _mm256_permute2f128_pd(z, z, 0x00);
      const __m256d zhi = _mm256_permute2f128_pd(z, z, 0x11);
      const __m256d y =
          _mm256_add_pd(cmul(zlo, wre_a, wim_a), cmul(zhi, wre_b, wim_b));
      _mm256_storeu_pd(p + 2 * i, y);
    }
    return;
  }
  const std::size_t tbit = std::size_t{1} << target;
  const __m256d m00r = _mm256_set1_pd(m[0].real());
  const __m256d m00i = _mm256_set1_pd(m[0].imag());
  const __m256d m01r = _mm256_set1_pd(m[1].real());
  const __m256d m01i = _mm256_set1_pd(m[1].imag());
  const __m256d m10r = _mm256_set1_pd(m[2].real());
  const __m256d m10i = _mm256_set1_pd(m[2].imag());
  const __m256d m11r = _mm256_set1_pd(m[3].real());
  const __m256d m11i = _mm256_set1_pd(m[3].imag());
  for (std::size_t base = 0; base < dim; base += tbit << 1) {
    for (std::size_t off = 0; off < tbit; off += 2) {
      double* p0 = p + 2 * (base + off);
      double* p1 = p + 2 * (base + off + tbit);
      const __m256d x0 = _mm256_loadu_pd(p0);
      const __m256d x1 = _mm256_loadu_pd(p1);
      const __m256d y0 =
          _mm256_add_pd(cmul(x0, m00r, m00i), cmul(x1, m01r, m01i));
      const __m256d y1 =
          _mm256_add_pd(cmul(x0, m10r, m10i), cmul(x1, m11r, m11i));
      _mm256_storeu_pd(p0, y0);
      _mm256_storeu_pd(p1, y1);
    }
  }
}

namespace {

inline void rot_cols(int axis, double* p0, double* p1, __m256d cv,
                     __m256d sv) {
  // sv carries the plain per-lane s values; sign patterns are applied here so
  // const and per-column variants share one body.
  const __m256d kFlipOdd = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  const __m256d kFlipEven = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  const __m256d x0 = _mm256_loadu_pd(p0);
  const __m256d x1 = _mm256_loadu_pd(p1);
  __m256d y0, y1;
  switch (axis) {
    case 0: {  // X
      const __m256d ss = _mm256_xor_pd(sv, kFlipOdd);  // [s, -s, ...]
      const __m256d x1s = _mm256_permute_pd(x1, 0x5);
      const __m256d x0s = _mm256_permute_pd(x0, 0x5);
      y0 = _mm256_add_pd(_mm256_mul_pd(cv, x0), _mm256_mul_pd(ss, x1s));
      y1 = _mm256_add_pd(_mm256_mul_pd(cv, x1), _mm256_mul_pd(ss, x0s));
      break;
    }
    case 1: {  // Y
      y0 = _mm256_sub_pd(_mm256_mul_pd(cv, x0), _mm256_mul_pd(sv, x1));
      y1 = _mm256_add_pd(_mm256_mul_pd(sv, x0), _mm256_mul_pd(cv, x1));
      break;
    }
    default: {  // Z
      const __m256d ss = _mm256_xor_pd(sv, kFlipOdd);   // [s, -s, ...]
      const __m256d ssn = _mm256_xor_pd(sv, kFlipEven); // [-s, s, ...]
      const __m256d x0s = _mm256_permute_pd(x0, 0x5);
      const __m256d x1s = _mm256_permute_pd(x1, 0x5);
      y0 = _mm256_add_pd(_mm256_mul_pd(cv, x0), _mm256_mul_pd(ss, x0s));
      y1 = _mm256_add_pd(_mm256_mul_pd(cv, x1), _mm256_mul_pd(ssn, x1s));
      break;
    }
  }
  _mm256_storeu_pd(p0, y0);
  _mm256_storeu_pd(p1, y1);
}

}  // namespace

void rows_rot_const(int axis, cplx* r0, cplx* r1, std::size_t ncols, double c,
                    double s) {
  double* p0 = reinterpret_cast<double*>(r0);
  double* p1 = reinterpret_cast<double*>(r1);
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sv = _mm256_set1_pd(s);
  std::size_t j = 0;
  for (; j + 2 <= ncols; j += 2) {
    rot_cols(axis, p0 + 2 * j, p1 + 2 * j, cv, sv);
  }
  for (; j < ncols; ++j) {
    rot_pair(axis, r0[j], r1[j], c, s);
  }
}

void rows_rot_percol(int axis, cplx* r0, cplx* r1, std::size_t ncols,
                     const double* c, const double* s) {
  double* p0 = reinterpret_cast<double*>(r0);
  double* p1 = reinterpret_cast<double*>(r1);
  std::size_t j = 0;
  for (; j + 2 <= ncols; j += 2) {
    rot_cols(axis, p0 + 2 * j, p1 + 2 * j, dup_pair(c + j), dup_pair(s + j));
  }
  for (; j < ncols; ++j) {
    rot_pair(axis, r0[j], r1[j], c[j], s[j]);
  }
}

void rows_apply_m(cplx* r0, cplx* r1, std::size_t ncols, const cplx m[4]) {
  double* p0 = reinterpret_cast<double*>(r0);
  double* p1 = reinterpret_cast<double*>(r1);
  const __m256d m00r = _mm256_set1_pd(m[0].real());
  const __m256d m00i = _mm256_set1_pd(m[0].imag());
  const __m256d m01r = _mm256_set1_pd(m[1].real());
  const __m256d m01i = _mm256_set1_pd(m[1].imag());
  const __m256d m10r = _mm256_set1_pd(m[2].real());
  const __m256d m10i = _mm256_set1_pd(m[2].imag());
  const __m256d m11r = _mm256_set1_pd(m[3].real());
  const __m256d m11i = _mm256_set1_pd(m[3].imag());
  std::size_t j = 0;
  for (; j + 2 <= ncols; j += 2) {
    const __m256d x0 = _mm256_loadu_pd(p0 + 2 * j);
    const __m256d x1 = _mm256_loadu_pd(p1 + 2 * j);
    const __m256d y0 =
        _mm256_add_pd(cmul(x0, m00r, m00i), cmul(x1, m01r, m01i));
    const __m256d y1 =
        _mm256_add_pd(cmul(x0, m10r, m10i), cmul(x1, m11r, m11i));
    _mm256_storeu_pd(p0 + 2 * j, y0);
    _mm256_storeu_pd(p1 + 2 * j, y1);
  }
  for (; j < ncols; ++j) {
    const double x0r = r0[j].real(), x0i = r0[j].imag();
    const double x1r = r1[j].real(), x1i = r1[j].imag();
    r0[j] = cplx((x0r * m[0].real() - x0i * m[0].imag()) +
                     (x1r * m[1].real() - x1i * m[1].imag()),
                 (x0i * m[0].real() + x0r * m[0].imag()) +
                     (x1i * m[1].real() + x1r * m[1].imag()));
    r1[j] = cplx((x0r * m[2].real() - x0i * m[2].imag()) +
                     (x1r * m[3].real() - x1i * m[3].imag()),
                 (x0i * m[2].real() + x0r * m[2].imag()) +
                     (x1i * m[3].real() + x1r * m[3].imag()));
  }
}

}  // namespace pqc::kern::avx2

#endif  // PQC_HAVE_AVX2
