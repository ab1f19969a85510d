#pragma once

#include <stdexcept>
#include <string>

namespace pqc {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// User-facing configuration problems (bad sizes, out-of-range knobs).
// The CLI maps these to exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed circuit structure: bad qubit indices, bad observable shapes.
struct StructuralError : Error {
  using Error::Error;
};

// Slot resolution failures: missing blocks/variables, dimension mismatches.
struct BindingError : Error {
  using Error::Error;
};

}  // namespace pqc
