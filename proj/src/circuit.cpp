#include "lcs/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace lcs {

bool is_two_qubit(GateKind k) {
  return k == GateKind::CNOT || k == GateKind::CZ || k == GateKind::SWAP;
}

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::P: return "P";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
  }
  return "?";
}

Gate make_gate(GateKind kind, int q1, int q2) {
  if (is_two_qubit(kind)) {
    if (q1 == q2) throw ParseError("two-qubit gate needs distinct qubits");
    if (q2 <= 0) throw ParseError("two-qubit gate needs two qubit indices");
  } else if (q2 != 0) {
    throw ParseError("single-qubit gate takes one qubit index");
  }
  if (q1 <= 0) throw ParseError("qubit indices are 1-based");
  return Gate{kind, q1, q2};
}

void Circuit::append(const Gate& g) {
  int hi = std::max(g.q1, g.q2);
  if (hi > static_cast<int>(m)) throw DimensionMismatch("gate qubit out of range");
  gates.push_back(g);
}

void Circuit::append(const Circuit& c) {
  for (const auto& g : c.gates) append(g);
}

CircuitMetrics metrics(const Circuit& c) {
  CircuitMetrics out;
  out.total_gates = c.gates.size();
  std::vector<std::size_t> layer(c.m + 1, 0), layer2q(c.m + 1, 0);
  for (const auto& g : c.gates) {
    out.qubits_touched.insert(g.q1);
    if (g.q2) out.qubits_touched.insert(g.q2);
    std::size_t at = layer[g.q1];
    if (g.q2) at = std::max(at, layer[g.q2]);
    ++at;
    layer[g.q1] = at;
    if (g.q2) layer[g.q2] = at;
    out.depth = std::max(out.depth, at);
    if (is_two_qubit(g.kind)) {
      ++out.two_qubit_count;
      std::size_t at2 = std::max(layer2q[g.q1], layer2q[g.q2]) + 1;
      layer2q[g.q1] = layer2q[g.q2] = at2;
      out.depth_two_qubit = std::max(out.depth_two_qubit, at2);
    }
  }
  return out;
}

namespace {

const char* qasm_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::P: return "s";
    case GateKind::CNOT: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
  }
  return "?";
}

}  // namespace

std::string emit(const Circuit& c, EmitFormat format) {
  std::ostringstream os;
  switch (format) {
    case EmitFormat::Text:
      for (const auto& g : c.gates) {
        os << gate_name(g.kind) << ' ' << g.q1;
        if (g.q2) os << ' ' << g.q2;
        os << '\n';
      }
      break;
    case EmitFormat::Json: {
      nlohmann::json j;
      j["m"] = c.m;
      j["gates"] = nlohmann::json::array();
      for (const auto& g : c.gates) {
        nlohmann::json jg;
        jg["kind"] = gate_name(g.kind);
        jg["qubits"] = g.q2 ? std::vector<int>{g.q1, g.q2} : std::vector<int>{g.q1};
        j["gates"].push_back(jg);
      }
      CircuitMetrics ms = metrics(c);
      j["metrics"] = {{"depth", ms.depth},
                      {"depth_two_qubit", ms.depth_two_qubit},
                      {"two_qubit_count", ms.two_qubit_count},
                      {"total_gates", ms.total_gates},
                      {"qubits_touched", ms.qubits_touched}};
      os << j.dump(2) << '\n';
      break;
    }
    case EmitFormat::Qasm:
      os << "OPENQASM 2.0;\n";
      os << "include \"qelib1.inc\";\n";
      os << "qreg q[" << c.m << "];\n";
      for (const auto& g : c.gates) {
        os << qasm_name(g.kind) << " q[" << (g.q1 - 1) << "]";
        if (g.q2) os << ",q[" << (g.q2 - 1) << "]";
        os << ";\n";
      }
      break;
  }
  return os.str();
}

Circuit parse_circuit(const std::string& text, std::size_t m) {
  static const std::map<std::string, GateKind> kinds = {
      {"H", GateKind::H},   {"P", GateKind::P},       {"CNOT", GateKind::CNOT},
      {"CZ", GateKind::CZ}, {"SWAP", GateKind::SWAP}, {"X", GateKind::X},
      {"Y", GateKind::Y},   {"Z", GateKind::Z}};
  Circuit c;
  c.m = m;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    auto it = kinds.find(name);
    if (it == kinds.end())
      throw ParseError("line " + std::to_string(lineno) + ": unknown gate '" + name + "'");
    int q1 = 0, q2 = 0;
    if (!(ls >> q1))
      throw ParseError("line " + std::to_string(lineno) + ": missing qubit index");
    if (is_two_qubit(it->second) && !(ls >> q2))
      throw ParseError("line " + std::to_string(lineno) + ": missing second qubit index");
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing input '" + extra + "'");
    c.append(make_gate(it->second, q1, q2));
  }
  return c;
}

}  // namespace lcs
