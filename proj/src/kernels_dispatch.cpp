#include <atomic>
#include <cstdlib>
#include <string>

#include "pqc/errors.hpp"
#include "pqc/kernels.hpp"

#include "kernels_impl.hpp"

namespace pqc::kern {

namespace {

const KernelTable kScalarTable = {
    scalar::apply_1q,
    scalar::rows_rot_const,
    scalar::rows_rot_percol,
    scalar::rows_apply_m,
};

#if defined(PQC_HAVE_AVX2)
const KernelTable kAvx2Table = {
    avx2::apply_1q,
    avx2::rows_rot_const,
    avx2::rows_rot_percol,
    avx2::rows_apply_m,
};
#endif

bool cpu_has_avx2() {
#if defined(PQC_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

struct State {
  const KernelTable* table;
  Isa isa;
};

State resolve_initial() {
  Isa want = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  if (const char* env = std::getenv("PQC_SIMD")) {
    const std::string v(env);
    if (v == "scalar") {
      want = Isa::scalar;
    } else if (v == "avx2") {
      if (!cpu_has_avx2()) {
        throw ConfigError("PQC_SIMD=avx2 requested but AVX2 is unavailable");
      }
      want = Isa::avx2;
    } else if (v != "auto" && !v.empty()) {
      throw ConfigError("PQC_SIMD must be scalar, avx2, or auto (got '" + v +
                        "')");
    }
  }
#if defined(PQC_HAVE_AVX2)
  if (want == Isa::avx2) return {&kAvx2Table, Isa::avx2};
#endif
  return {&kScalarTable, Isa::scalar};
}

State& state() {
  static State s = resolve_initial();
  return s;
}

}  // namespace

Isa active() { return state().isa; }

bool supported(Isa isa) {
  if (isa == Isa::scalar) return true;
  return cpu_has_avx2();
}

void force(Isa isa) {
  if (!supported(isa)) {
    throw ConfigError("kernel set '" + std::string(name(isa)) +
                      "' is unsupported on this machine");
  }
#if defined(PQC_HAVE_AVX2)
  if (isa == Isa::avx2) {
    state() = {&kAvx2Table, Isa::avx2};
    return;
  }
#endif
  state() = {&kScalarTable, Isa::scalar};
}

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

void apply_1q(cplx* amp, std::size_t dim, int target, const cplx m[4]) {
  state().table->apply_1q(amp, dim, target, m);
}

void rows_rot_const(int axis, cplx* r0, cplx* r1, std::size_t ncols, double c,
                    double s) {
  state().table->rows_rot_const(axis, r0, r1, ncols, c, s);
}

void rows_rot_percol(int axis, cplx* r0, cplx* r1, std::size_t ncols,
                     const double* c, const double* s) {
  state().table->rows_rot_percol(axis, r0, r1, ncols, c, s);
}

void rows_apply_m(cplx* r0, cplx* r1, std::size_t ncols, const cplx m[4]) {
  state().table->rows_apply_m(r0, r1, ncols, m);
}

}  // namespace pqc::kern
