#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dense_oracle.hpp"
#include "lcs/clifford.hpp"

using namespace lcs;

namespace {

std::mt19937 rng(1357);

F2Vector random_nonzero(std::size_t n) {
  for (;;) {
    F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    if (!v.is_zero()) return v;
  }
}

SympMatrix random_symplectic(std::size_t m) {
  SympMatrix f = SympMatrix::identity(m);
  std::size_t n = 1 + rng() % 12;
  for (std::size_t i = 0; i < n; ++i) f.f = f.f * transvection(random_nonzero(2 * m)).f;
  return f;
}

F2Matrix random_invertible(std::size_t n) {
  for (;;) {
    F2Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.set(i, j, rng() & 1);
    if (rank(a) == n) return a;
  }
}

F2Matrix random_symmetric(std::size_t n) {
  F2Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      bool b = rng() & 1;
      a.set(i, j, b);
      a.set(j, i, b);
    }
  return a;
}

std::vector<Gate> all_gates(std::size_t m) {
  std::vector<Gate> out;
  for (int q = 1; q <= static_cast<int>(m); ++q) {
    out.push_back(make_gate(GateKind::H, q));
    out.push_back(make_gate(GateKind::P, q));
    out.push_back(make_gate(GateKind::X, q));
    out.push_back(make_gate(GateKind::Y, q));
    out.push_back(make_gate(GateKind::Z, q));
  }
  for (int q1 = 1; q1 <= static_cast<int>(m); ++q1)
    for (int q2 = 1; q2 <= static_cast<int>(m); ++q2) {
      if (q1 == q2) continue;
      out.push_back(make_gate(GateKind::CNOT, q1, q2));
      if (q1 < q2) {
        out.push_back(make_gate(GateKind::CZ, q1, q2));
        out.push_back(make_gate(GateKind::SWAP, q1, q2));
      }
    }
  return out;
}

}  // namespace

TEST_CASE("elementary matrices are symplectic") {
  for (int t = 0; t < 50; ++t) {
    std::size_t m = 1 + rng() % 5;
    CHECK(is_symplectic(elementary_matrix(ElementaryFactor::omega_factor(m))));
    CHECK(is_symplectic(elementary_matrix(ElementaryFactor::permute(random_invertible(m)))));
    CHECK(is_symplectic(elementary_matrix(ElementaryFactor::diagonal(random_symmetric(m)))));
    CHECK(is_symplectic(elementary_matrix(ElementaryFactor::partial_hadamard(m, rng() % (m + 1)))));
  }
  CHECK_THROWS_AS(ElementaryFactor::permute(F2Matrix(2, 2)), SingularMatrix);
  CHECK_THROWS_AS(ElementaryFactor::diagonal(F2Matrix::from_strings({"01", "00"})),
                  InconsistentInput);
}

TEST_CASE("decompose round-trips on random symplectic matrices") {
  for (int t = 0; t < 500; ++t) {
    std::size_t m = 1 + rng() % 6;
    SympMatrix f = random_symplectic(m);
    Decomposition d = decompose(f);
    CHECK(d.k <= m);
    CHECK(d.r1.is_symmetric());
    CHECK(d.r2.is_symmetric());
    CHECK(rank(d.q1) == m);
    CHECK(rank(d.q2) == m);
    CHECK(recompose(d) == f);
  }
  CHECK_THROWS_AS(decompose({1, F2Matrix(2, 2)}), InconsistentInput);
}

TEST_CASE("permutation network realizes v -> vQ") {
  for (int t = 0; t < 300; ++t) {
    std::size_t m = 1 + rng() % 6;
    F2Matrix q = random_invertible(m);
    Circuit c;
    c.m = m;
    for (const auto& g : permutation_gates(q)) {
      CHECK((g.kind == GateKind::CNOT || g.kind == GateKind::SWAP));
      c.append(g);
    }
    SympMatrix action = circuit_symplectic(c);
    CHECK(action == elementary_matrix(ElementaryFactor::permute(q)));
  }
  CHECK(permutation_gates(F2Matrix::identity(4)).empty());
  CHECK_THROWS_AS(permutation_gates(F2Matrix(3, 3)), SingularMatrix);
}

TEST_CASE("lower_to_gates realizes the decomposed matrix") {
  for (int t = 0; t < 300; ++t) {
    std::size_t m = 1 + rng() % 5;
    SympMatrix f = random_symplectic(m);
    Circuit c = lower_to_gates(decompose(f));
    CHECK(circuit_symplectic(c) == f);
  }
}

TEST_CASE("CZ-layer matrices lower without Hadamard overhead") {
  // [[I,B],[0,I]] should become a pure P/CZ layer
  F2Matrix b = F2Matrix(3, 3);
  b.set(0, 1, true);
  b.set(1, 0, true);
  b.set(2, 2, true);
  F2Matrix f = F2Matrix::identity(6);
  f.paste(0, 3, b);
  Circuit c = lower_to_gates(decompose({3, f}));
  for (const auto& g : c.gates)
    CHECK((g.kind == GateKind::P || g.kind == GateKind::CZ));
  CHECK(circuit_symplectic(c) == SympMatrix{3, f});
}

TEST_CASE("conjugation matches the dense oracle for every gate and signed Pauli") {
  for (std::size_t m = 1; m <= 2; ++m) {
    for (const auto& g : all_gates(m)) {
      auto u = oracle::dense_gate(g, m);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * m)); ++bits)
        for (int phase = 0; phase < 4; ++phase) {
          PauliElement p = PauliElement::identity(m);
          for (std::size_t i = 0; i < m; ++i) {
            p.a.set(i, (bits >> i) & 1);
            p.b.set(i, (bits >> (m + i)) & 1);
          }
          p.phase_exp = phase;
          PauliElement got = conjugate(g, p);
          auto expect = oracle::conjugate_dense(u, oracle::dense_pauli(p));
          CHECK(oracle::approx_equal(expect, oracle::dense_pauli(got)));
        }
    }
  }
}

TEST_CASE("conjugate_circuit equals dense conjugation by the circuit unitary") {
  for (int t = 0; t < 100; ++t) {
    std::size_t m = 1 + rng() % 2;
    auto gates = all_gates(m);
    Circuit c;
    c.m = m;
    std::size_t len = 1 + rng() % 8;
    for (std::size_t i = 0; i < len; ++i) c.append(gates[rng() % gates.size()]);
    auto u = oracle::dense_circuit(c);
    PauliElement p = PauliElement::identity(m);
    for (std::size_t i = 0; i < m; ++i) {
      p.a.set(i, rng() & 1);
      p.b.set(i, rng() & 1);
    }
    p.phase_exp = rng() % 4;
    CHECK(oracle::approx_equal(oracle::conjugate_dense(u, oracle::dense_pauli(p)),
                               oracle::dense_pauli(conjugate_circuit(c, p))));
  }
}

TEST_CASE("circuit_symplectic drops phases but tracks the action") {
  Circuit c;
  c.m = 2;
  c.append(make_gate(GateKind::H, 1));
  c.append(make_gate(GateKind::CNOT, 1, 2));
  SympMatrix f = circuit_symplectic(c);
  CHECK(is_symplectic(f));
  // H then CNOT(1,2): X1 -> Z1 -> Z1Z2? no: conjugating X1 through H gives Z1,
  // then CNOT(1,2) fixes Z1. Z1 -> X1 -> X1X2.
  CHECK((PauliElement::single(2, 1, 'X').gamma() * f.f) ==
        parse_pauli("ZI").gamma());
  CHECK((PauliElement::single(2, 1, 'Z').gamma() * f.f) ==
        parse_pauli("XX").gamma());
}
