#include "pqc/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pqc/errors.hpp"

namespace pqc {

namespace {

using nlohmann::json;

json slot_to_json(const Slot& slot) {
  switch (slot.kind) {
    case Slot::Kind::constant:
      return {{"type", "constant"}, {"angle", slot.angle}};
    case Slot::Kind::parameter:
      return {{"type", "parameter"},
              {"block", slot.block},
              {"index", slot.index}};
    case Slot::Kind::data:
      return {{"type", "data"}, {"var", slot.var}};
  }
  throw Error("unreachable slot kind");
}

Slot slot_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") {
    return Slot::constant(j.value("angle", 0.0));
  }
  if (type == "parameter") {
    return Slot::parameter(j.at("block").get<std::string>(),
                           j.at("index").get<int>());
  }
  if (type == "data") {
    return Slot::data(j.at("var").get<std::string>());
  }
  throw ConfigError("unknown slot type '" + type + "'");
}

json matrix_to_json(const std::vector<cplx>& m) {
  json rows = json::array();
  for (const cplx& v : m) rows.push_back({v.real(), v.imag()});
  return rows;
}

std::vector<cplx> matrix_from_json(const json& j) {
  std::vector<cplx> m;
  m.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) {
      throw ConfigError("matrix entries must be [re, im] pairs");
    }
    m.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return m;
}

json gate_to_json(const Gate& gate) {
  json g;
  switch (gate.kind) {
    case Gate::Kind::pauli_rotation:
      g["kind"] = "rotation";
      g["pauli"] = gate.pauli;
      g["qubits"] = gate.qubits;
      g["slot"] = slot_to_json(gate.slot);
      break;
    case Gate::Kind::hadamard:
      g["kind"] = "hadamard";
      g["qubits"] = gate.qubits;
      break;
    case Gate::Kind::cnot:
      g["kind"] = "cnot";
      g["qubits"] = gate.qubits;
      break;
    case Gate::Kind::fixed_unitary:
      g["kind"] = "unitary";
      g["qubits"] = gate.qubits;
      g["matrix"] = matrix_to_json(gate.matrix);
      break;
  }
  return g;
}

Gate gate_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::vector<int> qubits = j.at("qubits").get<std::vector<int>>();
  if (kind == "rotation") {
    const std::string pauli = j.at("pauli").get<std::string>();
    const Slot slot =
        j.contains("slot") ? slot_from_json(j.at("slot")) : Slot::constant(0);
    return Gate::rotation(pauli, qubits, slot);
  }
  if (kind == "hadamard") {
    if (qubits.size() != 1) {
      throw ConfigError("hadamard takes exactly one qubit");
    }
    return Gate::hadamard(qubits[0]);
  }
  if (kind == "cnot") {
    if (qubits.size() != 2) {
      throw ConfigError("cnot takes exactly two qubits");
    }
    return Gate::cnot(qubits[0], qubits[1]);
  }
  if (kind == "unitary") {
    const std::vector<cplx> m = matrix_from_json(j.at("matrix"));
    if (qubits.size() == 1) return Gate::unitary1(qubits[0], m);
    if (qubits.size() == 2) return Gate::unitary2(qubits[0], qubits[1], m);
    throw ConfigError("unitary gates take one or two qubits");
  }
  throw ConfigError("unknown gate kind '" + kind + "'");
}

}  // namespace

std::string template_to_json(const CircuitTemplate& tmpl, int indent) {
  json doc;
  doc["n"] = tmpl.n;
  doc["gates"] = json::array();
  for (const Gate& gate : tmpl.gates) doc["gates"].push_back(gate_to_json(gate));
  doc["blocks"] = json::array();
  for (const Block& b : tmpl.blocks) {
    doc["blocks"].push_back({{"name", b.name}, {"dim", b.dim}});
  }
  doc["data_vars"] = tmpl.data_vars;
  return doc.dump(indent);
}

CircuitTemplate template_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("template is not valid JSON: ") + e.what());
  }
  CircuitTemplate tmpl;
  try {
    tmpl.n = doc.at("n").get<int>();
    for (const auto& g : doc.at("gates")) tmpl.gates.push_back(gate_from_json(g));
    if (doc.contains("blocks")) {
      for (const auto& b : doc.at("blocks")) {
        tmpl.blocks.push_back(
            {b.at("name").get<std::string>(), b.at("dim").get<int>()});
      }
    }
    if (doc.contains("data_vars")) {
      tmpl.data_vars = doc.at("data_vars").get<std::vector<std::string>>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed template document: ") + e.what());
  }
  tmpl.validate();
  return tmpl;
}

CircuitTemplate load_template(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open template file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return template_from_json(buf.str());
}

}  // namespace pqc
