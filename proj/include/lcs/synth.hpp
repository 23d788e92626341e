#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcs/circuit.hpp"
#include "lcs/clifford.hpp"
#include "lcs/codes.hpp"
#include "lcs/symplectic.hpp"

namespace lcs {

/// Desired conjugation action on the k logical qubits: the image of each
/// logical X_i and Z_i as a signed k-qubit Pauli over the logical operators.
struct LogicalTarget {
  std::size_t k = 0;
  std::vector<PauliElement> images_x;
  std::vector<PauliElement> images_z;

  static LogicalTarget identity(std::size_t k);
};

/// Fold gate conjugation on k qubits; gates index logical qubits.
LogicalTarget target_from_gates(std::size_t k, const std::vector<Gate>& gates);

/// Throws InconsistentTarget unless the images preserve all commutation
/// relations and carry real signs.
void check_target(const LogicalTarget& t);

/// Push a k-qubit logical Pauli down to the m-qubit physical operator it
/// denotes, multiplying out the code's logical X/Z representatives.
PauliElement expected_physical(const StabilizerCode& code, const PauliElement& logical);

/// Constraint rows: logical pairs first, then the stabilizer generators as
/// unpaired u vectors (centralized by default, or mapped to stab_images).
ConstraintSystem assemble(const StabilizerCode& code, const LogicalTarget& t,
                          const std::vector<PauliElement>* stab_images = nullptr);

struct Solution {
  SympMatrix f;
  Decomposition decomposition;
  Circuit circuit;  // includes trailing Pauli sign correction
  CircuitMetrics metric_values;
};

struct SynthOptions {
  SolveMode mode = SolveMode::Enumerate;
  std::uint64_t ceiling = kDefaultSolutionCeiling;
};

/// Enumerate/First: every returned Solution verifies sign-exactly.
/// Count mode returns an empty list; use assemble + solution_count_log2.
std::vector<Solution> synthesize(const StabilizerCode& code, const LogicalTarget& t,
                                 const SynthOptions& options = {},
                                 const std::vector<PauliElement>* stab_images = nullptr);

/// Append the Pauli correction making every constraint sign-exact.
/// Precondition: the circuit already realizes the right symplectic action.
void fix_signs(Circuit& c, const StabilizerCode& code, const LogicalTarget& t,
               const std::vector<PauliElement>* stab_images = nullptr);

struct ConstraintResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct VerifyReport {
  bool ok = false;
  std::vector<ConstraintResult> constraints;
};

VerifyReport verify(const Circuit& c, const StabilizerCode& code, const LogicalTarget& t,
                    const std::vector<PauliElement>* stab_images = nullptr);

struct Metric {
  enum class Kind { Depth, TwoQubitCount, TwoQubitDepth, AvoidQubits, Lexicographic };

  Kind kind = Kind::TwoQubitCount;
  std::set<int> avoid;          // AvoidQubits
  std::vector<Metric> parts;    // Lexicographic

  static Metric depth() { return {Kind::Depth, {}, {}}; }
  static Metric two_qubit_count() { return {Kind::TwoQubitCount, {}, {}}; }
  static Metric two_qubit_depth() { return {Kind::TwoQubitDepth, {}, {}}; }
  static Metric avoid_qubits(std::set<int> qs) {
    return {Kind::AvoidQubits, std::move(qs), {}};
  }
  static Metric lexicographic(std::vector<Metric> parts) {
    return {Kind::Lexicographic, {}, std::move(parts)};
  }
};

/// Sort key; smaller is better. Exposed for the ranking tests.
std::vector<std::uint64_t> metric_key(const CircuitMetrics& m, const Metric& metric);

/// Stable sort by metric_key; ties keep enumeration order.
std::vector<Solution> rank(std::vector<Solution> solutions, const Metric& metric);

/// Grammar: depth | 2q | 2qdepth | avoid:Q[,Q...] | lex:PART[+PART...].
Metric parse_metric(const std::string& text);

}  // namespace lcs
