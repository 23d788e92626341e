#pragma once

#include <set>
#include <string>
#include <vector>

#include "lcs/errors.hpp"

namespace lcs {

enum class GateKind { H, P, CNOT, CZ, SWAP, X, Y, Z };

bool is_two_qubit(GateKind k);
const char* gate_name(GateKind k);

/// Elementary gate on 1-based qubit indices.
struct Gate {
  GateKind kind;
  int q1 = 0;
  int q2 = 0;  // 0 for single-qubit gates

  bool operator==(const Gate& o) const = default;
};

Gate make_gate(GateKind kind, int q1, int q2 = 0);

struct Circuit {
  std::size_t m = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit& o) const = default;
  void append(const Gate& g);
  void append(const Circuit& c);
};

struct CircuitMetrics {
  std::size_t depth = 0;          // greedy ASAP layering, all gates count
  std::size_t depth_two_qubit = 0;  // same layering over two-qubit gates only
  std::size_t two_qubit_count = 0;
  std::size_t total_gates = 0;
  std::set<int> qubits_touched;
};

CircuitMetrics metrics(const Circuit& c);

enum class EmitFormat { Text, Json, Qasm };

/// Text: one gate per line, "CZ 2 3". Json: {"m", "gates", "metrics"}.
/// Qasm: OpenQASM-2 dialect with 0-based register q.
std::string emit(const Circuit& c, EmitFormat format);

/// Parse the Text format (round-trips with emit).
Circuit parse_circuit(const std::string& text, std::size_t m);

}  // namespace lcs
