#include "lcs/codes.hpp"

#include <sstream>

#include "lcs/symplectic.hpp"

namespace lcs {

std::vector<std::string> validate(const StabilizerCode& code) {
  std::vector<std::string> out;
  if (code.k > code.m) {
    out.push_back("k exceeds m");
    return out;
  }
  std::size_t r = code.m - code.k;
  if (code.stabilizers.size() != r)
    out.push_back("expected " + std::to_string(r) + " stabilizer generators, got " +
                  std::to_string(code.stabilizers.size()));
  if (code.logical_x.size() != code.k || code.logical_z.size() != code.k)
    out.push_back("expected " + std::to_string(code.k) + " logical X and Z operators");
  if (!out.empty()) return out;

  auto check_one = [&](const PauliElement& p, const std::string& who) {
    if (p.m != code.m) {
      out.push_back(who + " acts on " + std::to_string(p.m) + " qubits, not " +
                    std::to_string(code.m));
      return false;
    }
    if (!p.is_hermitian()) {
      out.push_back(who + " has imaginary sign " + format_pauli(p).substr(0, 2));
      return false;
    }
    return true;
  };

  std::vector<std::pair<PauliElement, std::string>> all;
  for (std::size_t i = 0; i < code.stabilizers.size(); ++i)
    all.emplace_back(code.stabilizers[i], "stabilizer " + std::to_string(i + 1));
  for (std::size_t i = 0; i < code.logical_x.size(); ++i)
    all.emplace_back(code.logical_x[i], "logical X" + std::to_string(i + 1));
  for (std::size_t i = 0; i < code.logical_z.size(); ++i)
    all.emplace_back(code.logical_z[i], "logical Z" + std::to_string(i + 1));
  for (auto& [p, who] : all)
    if (!check_one(p, who)) return out;
  if (!out.empty()) return out;

  // Commutation table: everything commutes except <Xbar_i, Zbar_i>.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      // Only Xbar_t with its own Zbar_t anticommutes.
      bool expect_anti = i >= r && i < r + code.k && j == i + code.k;
      bool anti = !commutes(all[i].first, all[j].first);
      if (anti != expect_anti)
        out.push_back(all[i].second + (anti ? " anticommutes with " : " commutes with ") +
                      all[j].second);
    }

  // GF(2) independence of all r + 2k rows.
  std::vector<F2Vector> rows;
  for (auto& [p, who] : all) rows.push_back(p.gamma());
  if (rank(F2Matrix::from_rows(rows)) != rows.size())
    out.push_back("stabilizers and logical Paulis are GF(2)-dependent");
  return out;
}

void require_valid(const StabilizerCode& code) {
  auto bad = validate(code);
  if (bad.empty()) return;
  std::string msg = "invalid code:";
  for (auto& v : bad) msg += "\n  " + v;
  throw InvalidCode(msg);
}

namespace {

StabilizerCode from_strings(std::size_t m, std::size_t k,
                            const std::vector<std::string>& stabs,
                            const std::vector<std::string>& lx,
                            const std::vector<std::string>& lz) {
  StabilizerCode c;
  c.m = m;
  c.k = k;
  for (auto& s : stabs) c.stabilizers.push_back(parse_pauli(s));
  for (auto& s : lx) c.logical_x.push_back(parse_pauli(s));
  for (auto& s : lz) c.logical_z.push_back(parse_pauli(s));
  require_valid(c);
  return c;
}

}  // namespace

StabilizerCode builtin_code(const std::string& name) {
  if (name == "642")
    return from_strings(6, 4, {"XXXXXX", "ZZZZZZ"},
                        {"XXIIII", "XIXIII", "XIIXII", "XIIIXI"},
                        {"IZIIIZ", "IIZIIZ", "IIIZIZ", "IIIIZZ"});
  if (name == "422")
    return from_strings(4, 2, {"XXXX", "ZZZZ"}, {"XXII", "XIXI"}, {"IZIZ", "IIZZ"});
  if (name == "513")
    return from_strings(5, 1, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, {"XXXXX"},
                        {"ZZZZZ"});
  throw UnknownCode("no builtin code named '" + name + "'");
}

std::vector<std::string> builtin_code_names() { return {"422", "513", "642"}; }

StabilizerCode parse_code(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  StabilizerCode c;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (!have_header) {
      long m = -1, k = -1;
      std::istringstream hs(line);
      if (!(hs >> m >> k) || m <= 0 || k < 0 || k > m)
        fail("expected header 'm k' with 0 <= k <= m");
      c.m = static_cast<std::size_t>(m);
      c.k = static_cast<std::size_t>(k);
      have_header = true;
      continue;
    }
    std::string pauli;
    if (!(ls >> pauli)) fail("missing Pauli string after '" + head + "'");
    std::string extra;
    if (ls >> extra) fail("trailing input '" + extra + "'");
    PauliElement p;
    try {
      p = parse_pauli(pauli);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    if (head == "stab")
      c.stabilizers.push_back(p);
    else if (head == "logx")
      c.logical_x.push_back(p);
    else if (head == "logz")
      c.logical_z.push_back(p);
    else
      fail("expected 'stab', 'logx' or 'logz', got '" + head + "'");
  }
  if (!have_header) throw ParseError("empty code file");
  return c;
}

std::string format_code(const StabilizerCode& code) {
  std::ostringstream os;
  os << code.m << ' ' << code.k << '\n';
  for (auto& p : code.stabilizers) os << "stab " << format_pauli(p) << '\n';
  for (auto& p : code.logical_x) os << "logx " << format_pauli(p) << '\n';
  for (auto& p : code.logical_z) os << "logz " << format_pauli(p) << '\n';
  return os.str();
}

}  // namespace lcs
