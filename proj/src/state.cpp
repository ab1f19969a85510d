#include "pqc/state.hpp"

#include <cmath>
#include <string>

#include "pqc/errors.hpp"

namespace pqc {

Statevector::Statevector(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits) {
    throw ConfigError("qubit count " + std::to_string(n) +
                      " outside supported range 1.." +
                      std::to_string(kMaxQubits));
  }
  amp_.assign(std::size_t{1} << n, cplx(0.0, 0.0));
  amp_[0] = 1.0;
}

double Statevector::norm() const {
  double s = 0.0;
  for (const cplx& a : amp_) {
    s += a.real() * a.real() + a.imag() * a.imag();
  }
  return std::sqrt(s);
}

Statevector zero_state(int n) { return Statevector(n); }

}  // namespace pqc
