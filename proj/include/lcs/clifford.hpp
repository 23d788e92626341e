#pragma once

#include "lcs/circuit.hpp"
#include "lcs/pauli.hpp"
#include "lcs/symplectic.hpp"

namespace lcs {

/// One factor of the universal elementary set:
///   Omega            -> transversal Hadamard, [[0,I],[I,0]]
///   Permute(Q)       -> CNOT/permutation network, [[Q,0],[0,Q^{-T}]]
///   Diagonal(R)      -> CZ/Phase layer, [[I,R],[0,I]] with R symmetric
///   PartialHadamard(t) -> H on qubits 1..t, [[L_{m-t},U_t],[U_t,L_{m-t}]]
struct ElementaryFactor {
  enum class Kind { Omega, Permute, Diagonal, PartialHadamard };

  static ElementaryFactor omega_factor(std::size_t m) { return {Kind::Omega, m, {}, 0}; }
  static ElementaryFactor permute(F2Matrix q);
  static ElementaryFactor diagonal(F2Matrix r);
  static ElementaryFactor partial_hadamard(std::size_t m, std::size_t t);

  Kind kind;
  std::size_t m = 0;
  F2Matrix mat;     // Q or R
  std::size_t t = 0;  // PartialHadamard only
};

SympMatrix elementary_matrix(const ElementaryFactor& f);

/// F = A_{Q1} Omega T_{R1} G_k T_{R2} A_{Q2}.
struct Decomposition {
  std::size_t m = 0;
  F2Matrix q1;  // invertible
  F2Matrix r1;  // symmetric
  std::size_t k = 0;
  F2Matrix r2;  // symmetric
  F2Matrix q2;  // invertible
};

/// Throws NotSymplectic (InconsistentInput) if F is not symplectic.
Decomposition decompose(const SympMatrix& f);

SympMatrix recompose(const Decomposition& d);

/// CNOT/SWAP network realizing v -> vQ for invertible Q.
std::vector<Gate> permutation_gates(const F2Matrix& q);

Circuit lower_to_gates(const Decomposition& d);

/// g p g-dagger, exact including phase.
PauliElement conjugate(const Gate& g, const PauliElement& p);

/// Fold of conjugate over the gates in order.
PauliElement conjugate_circuit(const Circuit& c, const PauliElement& p);

/// The circuit's induced symplectic matrix (phases dropped).
SympMatrix circuit_symplectic(const Circuit& c);

}  // namespace lcs
