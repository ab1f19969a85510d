#include "pqc/templates.hpp"

#include <string>
#include <utility>

#include "pqc/errors.hpp"

namespace pqc {

char axis_char(Axis axis, int qubit, int layer) {
  switch (axis) {
    case Axis::x:
      return 'X';
    case Axis::y:
      return 'Y';
    case Axis::z:
      return 'Z';
    case Axis::cycle:
      return "XYZ"[(qubit + layer) % 3];
  }
  return 'Y';
}

namespace {

void check_layered_args(int n, int L, Entangler ent) {
  if (n < 2) {
    if (ent == Entangler::ring) {
      throw StructuralError("ring entangler needs n >= 2");
    }
    throw ConfigError("layered templates need n >= 2");
  }
  if (L < 1) throw ConfigError("layered templates need L >= 1");
}

void append_entangler(std::vector<Gate>& gates, int n, Entangler ent) {
  switch (ent) {
    case Entangler::chain:
      for (int q = 0; q + 1 < n; ++q) gates.push_back(Gate::cnot(q, q + 1));
      break;
    case Entangler::ring:
      for (int q = 0; q + 1 < n; ++q) gates.push_back(Gate::cnot(q, q + 1));
      gates.push_back(Gate::cnot(n - 1, 0));
      break;
    case Entangler::brick:
      for (int q = 0; q + 1 < n; q += 2) gates.push_back(Gate::cnot(q, q + 1));
      for (int q = 1; q + 1 < n; q += 2) gates.push_back(Gate::cnot(q, q + 1));
      break;
  }
}

CircuitTemplate layered(int n, int L, Axis axis, Entangler ent, bool data) {
  check_layered_args(n, L, ent);
  CircuitTemplate t;
  t.n = n;
  for (int l = 0; l < L; ++l) {
    for (int q = 0; q < n; ++q) {
      const char a = axis_char(axis, q, l);
      const Slot slot = data ? Slot::data("x")
                             : Slot::parameter("b" + std::to_string(l), q);
      t.gates.push_back(Gate::rotation(a, q, slot));
    }
    append_entangler(t.gates, n, ent);
  }
  if (data) {
    t.data_vars = {"x"};
  } else {
    for (int l = 0; l < L; ++l) {
      t.blocks.push_back({"b" + std::to_string(l), n});
    }
  }
  t.validate();
  return t;
}

}  // namespace

CircuitTemplate hea(int n, int L, Axis axis, Entangler ent) {
  return layered(n, L, axis, ent, /*data=*/false);
}

CircuitTemplate hee(int n, int L, Axis axis, Entangler ent) {
  return layered(n, L, axis, ent, /*data=*/true);
}

FourierVar FourierVar::data(std::string var) {
  FourierVar v;
  v.kind = Kind::data;
  v.var = std::move(var);
  return v;
}

FourierVar FourierVar::param(std::string block, int index) {
  FourierVar v;
  v.kind = Kind::param;
  v.block = std::move(block);
  v.index = index;
  return v;
}

bool FourierVar::matches(const Slot& slot) const {
  if (kind == Kind::data) {
    return slot.kind == Slot::Kind::data && slot.var == var;
  }
  return slot.kind == Slot::Kind::parameter && slot.block == block &&
         slot.index == index;
}

void Model::validate() const {
  tmpl.validate();
  if (data_gate_count(*this) < 1) {
    throw StructuralError("spectral variable drives no rotation gate");
  }
  const int obs_n = obs.num_qubits();
  if (obs.kind == Observable::Kind::projector ? obs_n != tmpl.n
                                              : obs_n > tmpl.n) {
    throw StructuralError("observable size does not fit the circuit");
  }
}

int data_gate_count(const Model& model) {
  int count = 0;
  for (const Gate& g : model.tmpl.gates) {
    if (g.kind == Gate::Kind::pauli_rotation && model.var.matches(g.slot)) {
      ++count;
    }
  }
  return count;
}

Model qnn(int n, int L_embed, Axis axis, Entangler ent) {
  CircuitTemplate t = hee(n, L_embed, axis, ent);
  CircuitTemplate train = hea(n, 1, axis, Entangler::chain);
  for (Gate& g : train.gates) {
    if (g.kind == Gate::Kind::pauli_rotation &&
        g.slot.kind == Slot::Kind::parameter) {
      g.slot.block = "theta";
    }
    t.gates.push_back(std::move(g));
  }
  t.blocks.push_back({"theta", n});
  t.validate();

  Model m;
  m.tmpl = std::move(t);
  m.obs = Observable::all_z(n);
  m.var = FourierVar::data("x");
  m.validate();
  return m;
}

}  // namespace pqc
