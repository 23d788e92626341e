// Command-line front end: synthesis, decomposition, verification and the raw
// symplectic solver. See README for file formats and exit codes.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lcs/synth.hpp"

namespace {

using namespace lcs;

constexpr int kExitBadInput = 1;
constexpr int kExitInvalidCode = 2;
constexpr int kExitInconsistentTarget = 3;
constexpr int kExitCeiling = 4;

struct ExitWith {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitWith{kExitBadInput, "cannot open '" + path + "'"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

StabilizerCode load_code(const std::string& source) {
  try {
    if (source.starts_with("builtin:")) return builtin_code(source.substr(8));
    StabilizerCode c = parse_code(read_file(source));
    require_valid(c);
    return c;
  } catch (const UnknownCode& e) {
    throw ExitWith{kExitInvalidCode, e.what()};
  } catch (const InvalidCode& e) {
    throw ExitWith{kExitInvalidCode, e.what()};
  } catch (const ParseError& e) {
    throw ExitWith{kExitBadInput, e.what()};
  }
}

std::vector<Gate> parse_gate_list(const std::string& text) {
  std::string clean = text;
  for (char& c : clean)
    if (c == ';' || c == ',') c = ' ';
  static const std::map<std::string, GateKind> kinds = {
      {"H", GateKind::H},   {"P", GateKind::P},       {"CNOT", GateKind::CNOT},
      {"CZ", GateKind::CZ}, {"SWAP", GateKind::SWAP}, {"X", GateKind::X},
      {"Y", GateKind::Y},   {"Z", GateKind::Z}};
  std::istringstream is(clean);
  std::vector<Gate> gates;
  std::string name;
  while (is >> name) {
    auto it = kinds.find(name);
    if (it == kinds.end()) throw ParseError("unknown gate '" + name + "'");
    int q1 = 0, q2 = 0;
    if (!(is >> q1)) throw ParseError("missing qubit index after '" + name + "'");
    if (is_two_qubit(it->second) && !(is >> q2))
      throw ParseError("missing second qubit index after '" + name + "'");
    gates.push_back(make_gate(it->second, q1, q2));
  }
  return gates;
}

/// Target table file: lines "X <i> <signed-pauli>" / "Z <i> <signed-pauli>".
LogicalTarget parse_target_file(const std::string& text, std::size_t k) {
  LogicalTarget t = LogicalTarget::identity(k);
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string side, pauli;
    std::size_t i = 0;
    if (!(ls >> side)) continue;
    if (!(ls >> i >> pauli) || (side != "X" && side != "Z") || i < 1 || i > k)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'X|Z <index> <pauli>'");
    (side == "X" ? t.images_x : t.images_z)[i - 1] = parse_pauli(pauli);
  }
  return t;
}

LogicalTarget load_target(const StabilizerCode& code, const std::string& gates,
                          const std::string& target_file) {
  try {
    if (!target_file.empty()) return parse_target_file(read_file(target_file), code.k);
    return target_from_gates(code.k, parse_gate_list(gates));
  } catch (const ParseError& e) {
    throw ExitWith{kExitBadInput, e.what()};
  } catch (const DimensionMismatch& e) {
    throw ExitWith{kExitBadInput, e.what()};
  }
}

std::vector<PauliElement> parse_pauli_lines(const std::string& text) {
  std::vector<PauliElement> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    if (ls >> word) out.push_back(parse_pauli(word));
  }
  return out;
}

F2Matrix parse_matrix(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    if (ls >> word) rows.push_back(word);
  }
  if (rows.empty()) throw ParseError("empty matrix file");
  return F2Matrix::from_strings(rows);
}

std::string hex_row(const F2Vector& v) {
  // Bit 0 is the most significant nibble bit; width ceil(len/4) digits.
  std::string out;
  for (std::size_t i = 0; i < v.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4 && i + j < v.size(); ++j)
      nibble |= v.get(i + j) << (3 - j);
    out += "0123456789abcdef"[nibble];
  }
  return out;
}

void print_matrix(std::ostream& os, const F2Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) os << a.row(i).to_string() << '\n';
}

void print_solution(std::ostream& os, const Solution& s, std::size_t index,
                    const std::string& format) {
  if (format == "json") {
    os << emit(s.circuit, EmitFormat::Json);
    return;
  }
  if (format == "qasm") {
    os << emit(s.circuit, EmitFormat::Qasm);
    return;
  }
  os << "solution " << index << '\n';
  os << "F";
  for (std::size_t i = 0; i < s.f.f.rows(); ++i) os << ' ' << hex_row(s.f.f.row(i));
  os << '\n';
  const CircuitMetrics& m = s.metric_values;
  os << "metrics depth=" << m.depth << " 2q=" << m.two_qubit_count
     << " 2qdepth=" << m.depth_two_qubit << " gates=" << m.total_gates << '\n';
  os << emit(s.circuit, EmitFormat::Text) << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"logical Clifford synthesis for stabilizer codes"};
  app.require_subcommand(1);

  std::string code_source, gates, target_file, stab_file, metric_text = "2q";
  std::string mode_text = "all", format = "text", output_path;
  std::uint64_t ceiling = kDefaultSolutionCeiling;

  auto add_code_opts = [&](CLI::App* cmd, bool need_target) {
    cmd->add_option("--code", code_source, "builtin:NAME or code file path")->required();
    if (need_target) {
      cmd->add_option("--gates", gates, "logical gate list, e.g. \"CZ 1 2; H 1\"");
      cmd->add_option("--target-file", target_file, "conjugation-table file");
      cmd->add_option("--stab-images", stab_file,
                      "file with one signed Pauli image per stabilizer generator");
    }
  };

  auto* synth = app.add_subcommand("synth", "enumerate circuits for a logical operator");
  add_code_opts(synth, true);
  synth->add_option("--mode", mode_text, "all|first|count")->check(CLI::IsMember({"all", "first", "count"}));
  synth->add_option("--metric", metric_text, "depth|2q|2qdepth|avoid:LIST|lex:P+P...");
  synth->add_option("--format", format, "text|json|qasm")->check(CLI::IsMember({"text", "json", "qasm"}));
  synth->add_option("--ceiling", ceiling, "max enumerated solutions");
  synth->add_option("--output", output_path, "write to file instead of stdout");
  std::size_t top_n = 0;
  synth->add_option("--top", top_n, "print only the best N solutions")->check(CLI::PositiveNumber);

  auto* decomp = app.add_subcommand("decompose", "factor a symplectic matrix and lower it");
  std::string matrix_path;
  decomp->add_option("--matrix", matrix_path, "file of 0/1 rows")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check a circuit against code and target");
  add_code_opts(verify_cmd, true);
  std::string circuit_path;
  verify_cmd->add_option("--circuit", circuit_path, "gate-list file")->required();

  auto* solve = app.add_subcommand("solve", "raw symplectic constraint solver");
  std::string constraints_path;
  solve->add_option("--constraints", constraints_path, "file with 'x y' bit-row pairs")
      ->required();
  solve->add_option("--mode", mode_text, "all|first|count")->check(CLI::IsMember({"all", "first", "count"}));
  solve->add_option("--ceiling", ceiling, "max enumerated solutions");

  auto* codes_cmd = app.add_subcommand("codes", "list builtin codes");
  std::string show_name;
  codes_cmd->add_option("--show", show_name, "print a builtin code definition");

  CLI11_PARSE(app, argc, argv);

  std::ofstream file_out;
  std::ostream* os = &std::cout;
  if (!output_path.empty()) {
    file_out.open(output_path, std::ios::binary);
    if (!file_out) throw ExitWith{kExitBadInput, "cannot write '" + output_path + "'"};
    os = &file_out;
  }

  if (codes_cmd->parsed()) {
    if (!show_name.empty()) {
      try {
        *os << format_code(builtin_code(show_name));
      } catch (const UnknownCode& e) {
        throw ExitWith{kExitInvalidCode, e.what()};
      }
    } else {
      for (const auto& name : builtin_code_names()) *os << name << '\n';
    }
    return 0;
  }

  if (decomp->parsed()) {
    F2Matrix f;
    try {
      f = parse_matrix(read_file(matrix_path));
    } catch (const ParseError& e) {
      throw ExitWith{kExitBadInput, e.what()};
    }
    if (f.rows() != f.cols() || f.rows() % 2 != 0 || !is_symplectic(f))
      throw ExitWith{kExitInvalidCode, "input matrix is not symplectic"};
    Decomposition d = decompose({f.rows() / 2, f});
    *os << "k " << d.k << '\n';
    *os << "Q1\n";
    print_matrix(*os, d.q1);
    *os << "R1\n";
    print_matrix(*os, d.r1);
    *os << "R2\n";
    print_matrix(*os, d.r2);
    *os << "Q2\n";
    print_matrix(*os, d.q2);
    *os << "circuit\n" << emit(lower_to_gates(d), EmitFormat::Text);
    return 0;
  }

  if (solve->parsed()) {
    std::vector<F2Vector> xs, ys;
    try {
      std::istringstream is(read_file(constraints_path));
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string x, y;
        if (!(ls >> x)) continue;
        if (!(ls >> y) || x.size() != y.size() || x.size() % 2 != 0)
          throw ParseError("line " + std::to_string(lineno) +
                           ": expected two equal even-length bit rows");
        xs.push_back(F2Vector::from_string(x));
        ys.push_back(F2Vector::from_string(y));
      }
      if (xs.empty()) throw ParseError("empty constraint file");
    } catch (const ParseError& e) {
      throw ExitWith{kExitBadInput, e.what()};
    }
    try {
      ConstraintSystem sys = build_system(xs, ys, xs[0].size() / 2);
      if (mode_text == "count") {
        sys.check();
        std::uint64_t lg = solution_count_log2(sys);
        if (lg < 64)
          *os << (std::uint64_t{1} << lg) << '\n';
        else
          *os << "2^" << lg << '\n';
        return 0;
      }
      auto mode = mode_text == "first" ? SolveMode::First : SolveMode::Enumerate;
      auto sols = solve_all(sys, mode, ceiling);
      for (const auto& s : sols) {
        for (std::size_t i = 0; i < s.f.rows(); ++i)
          *os << (i ? " " : "") << hex_row(s.f.row(i));
        *os << '\n';
      }
    } catch (const CeilingExceeded& e) {
      throw ExitWith{kExitCeiling, e.what()};
    } catch (const IncompatibleInnerProducts& e) {
      throw ExitWith{kExitInconsistentTarget, e.what()};
    } catch (const DependentInputs& e) {
      throw ExitWith{kExitInconsistentTarget, e.what()};
    } catch (const InconsistentInput& e) {
      throw ExitWith{kExitInconsistentTarget, e.what()};
    }
    return 0;
  }

  // synth and verify need code + target.
  StabilizerCode code = load_code(code_source);
  LogicalTarget target = load_target(code, gates, target_file);
  std::vector<PauliElement> stab_images;
  const std::vector<PauliElement>* stab_ptr = nullptr;
  if (!stab_file.empty()) {
    try {
      stab_images = parse_pauli_lines(read_file(stab_file));
    } catch (const ParseError& e) {
      throw ExitWith{kExitBadInput, e.what()};
    }
    stab_ptr = &stab_images;
  }

  if (verify_cmd->parsed()) {
    Circuit c;
    try {
      c = parse_circuit(read_file(circuit_path), code.m);
    } catch (const ParseError& e) {
      throw ExitWith{kExitBadInput, e.what()};
    }
    VerifyReport report;
    try {
      report = verify(c, code, target, stab_ptr);
    } catch (const InconsistentTarget& e) {
      throw ExitWith{kExitInconsistentTarget, e.what()};
    }
    for (const auto& r : report.constraints)
      *os << (r.ok ? "ok   " : "FAIL ") << r.name << ": expected " << r.expected
          << ", got " << r.actual << '\n';
    *os << (report.ok ? "PASS" : "FAIL") << '\n';
    return report.ok ? 0 : 5;
  }

  // synth
  try {
    if (mode_text == "count") {
      ConstraintSystem sys = assemble(code, target, stab_ptr);
      std::uint64_t lg = solution_count_log2(sys);
      if (lg < 64)
        *os << (std::uint64_t{1} << lg) << '\n';
      else
        *os << "2^" << lg << '\n';
      return 0;
    }
    SynthOptions opts;
    opts.mode = mode_text == "first" ? SolveMode::First : SolveMode::Enumerate;
    opts.ceiling = ceiling;
    auto sols = rank(synthesize(code, target, opts, stab_ptr), parse_metric(metric_text));
    std::size_t top = sols.size();
    if (top_n > 0) top = std::min(top, top_n);
    for (std::size_t i = 0; i < top; ++i) print_solution(*os, sols[i], i + 1, format);
  } catch (const CeilingExceeded& e) {
    throw ExitWith{kExitCeiling, e.what()};
  } catch (const InconsistentTarget& e) {
    throw ExitWith{kExitInconsistentTarget, e.what()};
  } catch (const ParseError& e) {
    throw ExitWith{kExitBadInput, e.what()};
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ExitWith& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const lcs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
