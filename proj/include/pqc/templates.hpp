#pragma once

#include <map>
#include <string>
#include <vector>

#include "pqc/circuit.hpp"

namespace pqc {

// Layered hardware-efficient ansatz: per layer, one single-qubit rotation per
// qubit (each with its own parameter slot) followed by the entangler.
// Parameters live in L blocks "b0".."b{L-1}" of dimension n.
CircuitTemplate hea(int n, int L, Axis axis = Axis::cycle,
                    Entangler ent = Entangler::brick);

// Same layout with every rotation slot bound to the single data variable "x"
// (data re-uploading); no parameter blocks.
CircuitTemplate hee(int n, int L, Axis axis = Axis::cycle,
                    Entangler ent = Entangler::brick);

// Designates which scalar the spectrum is taken in: a data variable or one
// parameter slot.
struct FourierVar {
  enum class Kind { data, param };
  Kind kind = Kind::data;
  std::string var;    // data
  std::string block;  // param
  int index = 0;      // param

  static FourierVar data(std::string var);
  static FourierVar param(std::string block, int index);

  bool matches(const Slot& slot) const;
};

// A circuit template plus observable, spectral variable, and fixed bindings
// for everything else.
struct Model {
  CircuitTemplate tmpl;
  Observable obs;
  FourierVar var;
  ParamMap fixed_params;
  DataMap fixed_data;

  // Requires the spectral variable to drive at least one rotation.
  void validate() const;
};

// Rotation gates driven by the model's spectral variable; the spectrum in
// that variable is supported on integer frequencies in [-R, R].
int data_gate_count(const Model& model);

// Data re-uploading model: hee(n, L) embedding followed by one trainable
// hea layer (chain entangler; a brick trainable layer measurably slows the
// ensemble's convergence), measuring Z on every qubit. The trainable block
// is named "theta".
Model qnn(int n, int L_embed, Axis axis = Axis::cycle,
          Entangler ent = Entangler::brick);

// Axis character for (qubit, layer) under the given knob.
char axis_char(Axis axis, int qubit, int layer);

}  // namespace pqc
