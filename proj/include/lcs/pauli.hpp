#pragma once

#include <string>
#include <string_view>

#include "lcs/f2.hpp"

namespace lcs {

/// i^phase_exp * E(a,b), where E(a,b) = i^{a b^T mod 4} X^{a_1}Z^{b_1} x ... is
/// the Hermitian representative of the Pauli class [a,b].
struct PauliElement {
  std::size_t m = 0;
  F2Vector a;  // X part, length m
  F2Vector b;  // Z part, length m
  int phase_exp = 0;  // mod 4

  static PauliElement identity(std::size_t m) {
    return {m, F2Vector(m), F2Vector(m), 0};
  }
  /// Single-qubit generator at 1-based qubit q; axis in {'X','Y','Z'}.
  static PauliElement single(std::size_t m, std::size_t q, char axis, int phase_exp = 0);

  bool operator==(const PauliElement& o) const = default;

  bool is_identity_class() const { return a.is_zero() && b.is_zero(); }
  bool is_hermitian() const { return phase_exp % 2 == 0; }

  /// gamma(p) = [a, b], the length-2m binary label.
  F2Vector gamma() const { return a.concat(b); }
};

PauliElement multiply(const PauliElement& p, const PauliElement& q);

bool commutes(const PauliElement& p, const PauliElement& q);

/// Grammar: sign? [IXYZ]{m} with sign in {+, -, +i, -i}.
PauliElement parse_pauli(std::string_view s);
std::string format_pauli(const PauliElement& p);

}  // namespace lcs
