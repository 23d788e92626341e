#include "lcs/pauli.hpp"

#include "lcs/symplectic.hpp"

namespace lcs {

PauliElement PauliElement::single(std::size_t m, std::size_t q, char axis, int phase_exp) {
  if (q < 1 || q > m) throw DimensionMismatch("qubit index out of range");
  PauliElement p = identity(m);
  p.phase_exp = ((phase_exp % 4) + 4) % 4;
  switch (axis) {
    case 'X':
      p.a.set(q - 1, true);
      break;
    case 'Z':
      p.b.set(q - 1, true);
      break;
    case 'Y':
      p.a.set(q - 1, true);
      p.b.set(q - 1, true);
      break;
    default:
      throw ParseError("axis must be X, Y or Z");
  }
  return p;
}

PauliElement multiply(const PauliElement& p, const PauliElement& q) {
  if (p.m != q.m) throw DimensionMismatch("Pauli qubit counts differ");
  PauliElement r;
  r.m = p.m;
  r.a = p.a + q.a;
  r.b = p.b + q.b;
  // i^x E(a,b) i^y E(a',b') = i^{x+y+ab^T+a'b'^T} D(a,b) D(a',b')
  //                         = i^{x+y+ab^T+a'b'^T+2 a'b^T} D(a'',b'')
  // with a'' = a+a' mod 2, and D(a'',b'') = i^{-a''b''^T} E(a'',b'').
  int e = p.phase_exp + q.phase_exp + p.a.dot_int(p.b) + q.a.dot_int(q.b) +
          2 * q.a.dot_int(p.b) - r.a.dot_int(r.b);
  r.phase_exp = ((e % 4) + 4) % 4;
  return r;
}

bool commutes(const PauliElement& p, const PauliElement& q) {
  if (p.m != q.m) throw DimensionMismatch("Pauli qubit counts differ");
  return !symp_inner(p.gamma(), q.gamma());
}

PauliElement parse_pauli(std::string_view s) {
  int phase = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    bool neg = s[0] == '-';
    s.remove_prefix(1);
    if (!s.empty() && s[0] == 'i') {
      phase = neg ? 3 : 1;
      s.remove_prefix(1);
    } else {
      phase = neg ? 2 : 0;
    }
  }
  if (s.empty()) throw ParseError("empty Pauli string");
  PauliElement p = PauliElement::identity(s.size());
  p.phase_exp = phase;
  for (std::size_t j = 0; j < s.size(); ++j) {
    switch (s[j]) {
      case 'I':
        break;
      case 'X':
        p.a.set(j, true);
        break;
      case 'Z':
        p.b.set(j, true);
        break;
      case 'Y':
        p.a.set(j, true);
        p.b.set(j, true);
        break;
      default:
        throw ParseError(std::string("bad Pauli character '") + s[j] + "'");
    }
  }
  return p;
}

std::string format_pauli(const PauliElement& p) {
  static const char* signs[4] = {"+", "+i", "-", "-i"};
  std::string out = signs[((p.phase_exp % 4) + 4) % 4];
  for (std::size_t j = 0; j < p.m; ++j) {
    bool x = p.a.get(j), z = p.b.get(j);
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

}  // namespace lcs
