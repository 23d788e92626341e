#include "lcs/clifford.hpp"

#include <cassert>

namespace lcs {

ElementaryFactor ElementaryFactor::permute(F2Matrix q) {
  if (q.rows() != q.cols()) throw DimensionMismatch("Q must be square");
  if (rank(q) < q.rows()) throw SingularMatrix("permutation factor needs invertible Q");
  return {Kind::Permute, q.rows(), std::move(q), 0};
}

ElementaryFactor ElementaryFactor::diagonal(F2Matrix r) {
  if (!r.is_symmetric()) throw InconsistentInput("diagonal factor needs symmetric R");
  return {Kind::Diagonal, r.rows(), std::move(r), 0};
}

ElementaryFactor ElementaryFactor::partial_hadamard(std::size_t m, std::size_t t) {
  if (t > m) throw DimensionMismatch("partial Hadamard count exceeds qubit count");
  return {Kind::PartialHadamard, m, {}, t};
}

SympMatrix elementary_matrix(const ElementaryFactor& f) {
  std::size_t m = f.m;
  F2Matrix out(2 * m, 2 * m);
  switch (f.kind) {
    case ElementaryFactor::Kind::Omega:
      return {m, omega(m)};
    case ElementaryFactor::Kind::Permute:
      out.paste(0, 0, f.mat);
      out.paste(m, m, inverse(f.mat).transposed());
      return {m, out};
    case ElementaryFactor::Kind::Diagonal:
      out = F2Matrix::identity(2 * m);
      out.paste(0, m, f.mat);
      return {m, out};
    case ElementaryFactor::Kind::PartialHadamard:
      // U_t = diag(I_t, 0), L_{m-t} = diag(0, I_{m-t})
      for (std::size_t i = 0; i < m; ++i) {
        if (i < f.t) {
          out.set(i, m + i, true);
          out.set(m + i, i, true);
        } else {
          out.set(i, i, true);
          out.set(m + i, m + i, true);
        }
      }
      return {m, out};
  }
  throw Error("unreachable factor kind");
}

Decomposition decompose(const SympMatrix& s) {
  if (!is_symplectic(s.f)) throw InconsistentInput("decompose requires a symplectic matrix");
  std::size_t m = s.m;

  F2Matrix a = s.f.block(0, 0, m, m);
  auto rr = row_reduce(a);
  std::size_t k = rr.pivots.size();
  F2Matrix q11inv = rr.transform;

  // Column operations taking rref(A) to [[I_k,0],[0,0]], accumulated in q2inv.
  F2Matrix acur = rr.rref;
  F2Matrix q2inv = F2Matrix::identity(m);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t c = 0;
    while (!acur.get(i, c)) ++c;
    if (c != i) {
      acur.swap_cols(i, c);
      q2inv.swap_cols(i, c);
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (j != i && acur.get(i, j)) {
        acur.add_col(j, i);
        q2inv.add_col(j, i);
      }

  auto aq = [](const F2Matrix& q) { return elementary_matrix(ElementaryFactor::permute(q)).f; };

  F2Matrix work = aq(q11inv) * s.f * aq(q2inv);

  // Top-right block now is [[R_k, E'],[0, B_{m-k}]] with invertible B_{m-k}.
  if (k < m) {
    F2Matrix bmk = work.block(k, m + k, m - k, m - k);
    F2Matrix q12inv = F2Matrix::identity(m);
    q12inv.paste(k, k, inverse(bmk));
    F2Matrix eprime = work.block(0, m + k, k, m - k);
    F2Matrix q13inv = F2Matrix::identity(m);
    q13inv.paste(0, k, eprime);
    work = aq(q13inv) * aq(q12inv) * work;
    q11inv = q13inv * q12inv * q11inv;
  }

  F2Matrix r2(m, m);
  r2.paste(0, 0, work.block(0, m, k, k));
  if (!r2.is_symmetric()) throw InconsistentInput("decomposition failed: R2 not symmetric");

  work = work * elementary_matrix(ElementaryFactor::diagonal(r2)).f *
         elementary_matrix(ElementaryFactor::partial_hadamard(m, k)).f * omega(m);

  // work must now be [[I, 0],[R1, I]].
  F2Matrix r1 = work.block(m, 0, m, m);
  F2Matrix expect = F2Matrix::identity(2 * m);
  expect.paste(m, 0, r1);
  if (work != expect || !r1.is_symmetric())
    throw InconsistentInput("decomposition failed to reach standard form");

  return {m, inverse(q11inv), r1, k, r2, inverse(q2inv)};
}

SympMatrix recompose(const Decomposition& d) {
  std::size_t m = d.m;
  F2Matrix f = elementary_matrix(ElementaryFactor::permute(d.q1)).f * omega(m) *
               elementary_matrix(ElementaryFactor::diagonal(d.r1)).f *
               elementary_matrix(ElementaryFactor::partial_hadamard(m, d.k)).f *
               elementary_matrix(ElementaryFactor::diagonal(d.r2)).f *
               elementary_matrix(ElementaryFactor::permute(d.q2)).f;
  return {m, f};
}

std::vector<Gate> permutation_gates(const F2Matrix& q) {
  std::size_t n = q.rows();
  if (rank(q) < n) throw SingularMatrix("permutation network needs invertible Q");
  F2Matrix work = q;
  std::vector<Gate> gates;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (!work.get(r, col)) ++r;
    if (r != col) {
      work.swap_rows(col, r);
      gates.push_back(make_gate(GateKind::SWAP, static_cast<int>(col) + 1,
                                static_cast<int>(r) + 1));
    }
    for (std::size_t i = 0; i < n; ++i)
      if (i != col && work.get(i, col)) {
        work.add_row(i, col);
        gates.push_back(make_gate(GateKind::CNOT, static_cast<int>(i) + 1,
                                  static_cast<int>(col) + 1));
      }
  }
  return gates;
}

Circuit lower_to_gates(const Decomposition& d) {
  std::size_t m = d.m;
  Circuit c;
  c.m = m;
  auto add_diagonal = [&](const F2Matrix& r) {
    for (std::size_t i = 0; i < m; ++i)
      if (r.get(i, i)) c.append(make_gate(GateKind::P, static_cast<int>(i) + 1));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (r.get(i, j))
          c.append(make_gate(GateKind::CZ, static_cast<int>(i) + 1,
                             static_cast<int>(j) + 1));
  };
  for (const auto& g : permutation_gates(d.q1)) c.append(g);
  if (d.r1.is_zero() && d.k == m) {
    // Omega G_m = I; the Hadamard layers cancel.
  } else {
    for (std::size_t qb = 1; qb <= m; ++qb) c.append(make_gate(GateKind::H, static_cast<int>(qb)));
    add_diagonal(d.r1);
    for (std::size_t qb = 1; qb <= d.k; ++qb) c.append(make_gate(GateKind::H, static_cast<int>(qb)));
  }
  add_diagonal(d.r2);
  for (const auto& g : permutation_gates(d.q2)) c.append(g);
  return c;
}

namespace {

// Image of the generator X_q (or Z_q) under the gate, exact including sign.
PauliElement image_x(const Gate& g, std::size_t m, std::size_t q) {
  int qi = static_cast<int>(q);
  switch (g.kind) {
    case GateKind::H:
      if (qi == g.q1) return PauliElement::single(m, q, 'Z');
      break;
    case GateKind::P:
      if (qi == g.q1) return PauliElement::single(m, q, 'Y');
      break;
    case GateKind::X:
      break;
    case GateKind::Y:
    case GateKind::Z:
      if (qi == g.q1) return PauliElement::single(m, q, 'X', 2);
      break;
    case GateKind::CNOT:
      if (qi == g.q1)
        return multiply(PauliElement::single(m, g.q1, 'X'),
                        PauliElement::single(m, g.q2, 'X'));
      break;
    case GateKind::CZ:
      if (qi == g.q1)
        return multiply(PauliElement::single(m, g.q1, 'X'),
                        PauliElement::single(m, g.q2, 'Z'));
      if (qi == g.q2)
        return multiply(PauliElement::single(m, g.q2, 'X'),
                        PauliElement::single(m, g.q1, 'Z'));
      break;
    case GateKind::SWAP:
      if (qi == g.q1) return PauliElement::single(m, g.q2, 'X');
      if (qi == g.q2) return PauliElement::single(m, g.q1, 'X');
      break;
  }
  return PauliElement::single(m, q, 'X');
}

PauliElement image_z(const Gate& g, std::size_t m, std::size_t q) {
  int qi = static_cast<int>(q);
  switch (g.kind) {
    case GateKind::H:
      if (qi == g.q1) return PauliElement::single(m, q, 'X');
      break;
    case GateKind::P:
    case GateKind::Z:
      break;
    case GateKind::X:
    case GateKind::Y:
      if (qi == g.q1) return PauliElement::single(m, q, 'Z', 2);
      break;
    case GateKind::CNOT:
      if (qi == g.q2)
        return multiply(PauliElement::single(m, g.q1, 'Z'),
                        PauliElement::single(m, g.q2, 'Z'));
      break;
    case GateKind::CZ:
      break;
    case GateKind::SWAP:
      if (qi == g.q1) return PauliElement::single(m, g.q2, 'Z');
      if (qi == g.q2) return PauliElement::single(m, g.q1, 'Z');
      break;
  }
  return PauliElement::single(m, q, 'Z');
}

}  // namespace

PauliElement conjugate(const Gate& g, const PauliElement& p) {
  std::size_t m = p.m;
  if (g.q1 < 1 || g.q1 > static_cast<int>(m) || g.q2 < 0 || g.q2 > static_cast<int>(m))
    throw DimensionMismatch("gate qubit out of range");
  // i^k E(a,b) = i^{k + ab^T} prod_q X_q^{a_q} Z_q^{b_q}; conjugation is a
  // homomorphism, so push each generator factor through the gate.
  PauliElement out = PauliElement::identity(m);
  out.phase_exp = ((p.phase_exp + p.a.dot_int(p.b)) % 4 + 4) % 4;
  for (std::size_t q = 1; q <= m; ++q) {
    if (p.a.get(q - 1)) out = multiply(out, image_x(g, m, q));
    if (p.b.get(q - 1)) out = multiply(out, image_z(g, m, q));
  }
  return out;
}

PauliElement conjugate_circuit(const Circuit& c, const PauliElement& p) {
  PauliElement out = p;
  for (const auto& g : c.gates) out = conjugate(g, out);
  return out;
}

SympMatrix circuit_symplectic(const Circuit& c) {
  std::size_t m = c.m;
  F2Matrix f(2 * m, 2 * m);
  for (std::size_t i = 0; i < 2 * m; ++i) {
    PauliElement p = i < m ? PauliElement::single(m, i + 1, 'X')
                           : PauliElement::single(m, i - m + 1, 'Z');
    f.set_row(i, conjugate_circuit(c, p).gamma());
  }
  return {m, f};
}

}  // namespace lcs
