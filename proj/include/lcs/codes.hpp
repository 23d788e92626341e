#pragma once

#include <string>
#include <vector>

#include "lcs/pauli.hpp"

namespace lcs {

/// [[m,k]] stabilizer code with designated logical Paulis.
struct StabilizerCode {
  std::size_t m = 0;
  std::size_t k = 0;
  std::vector<PauliElement> stabilizers;  // r = m-k signed generators
  std::vector<PauliElement> logical_x;    // k
  std::vector<PauliElement> logical_z;    // k

  std::size_t r() const { return m - k; }
};

/// Invariant violations as data; empty means the code is valid.
std::vector<std::string> validate(const StabilizerCode& code);

/// Throws InvalidCode listing every violation.
void require_valid(const StabilizerCode& code);

/// name in {"422", "642", "513"}; throws UnknownCode otherwise.
StabilizerCode builtin_code(const std::string& name);

std::vector<std::string> builtin_code_names();

/// Line-oriented format: header "m k", then r lines "stab <pauli>",
/// k lines "logx <pauli>", k lines "logz <pauli>"; '#' starts a comment.
StabilizerCode parse_code(const std::string& text);

std::string format_code(const StabilizerCode& code);

}  // namespace lcs
