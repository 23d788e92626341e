#include "lcs/synth.hpp"

#include <algorithm>
#include <sstream>

namespace lcs {

LogicalTarget LogicalTarget::identity(std::size_t k) {
  LogicalTarget t;
  t.k = k;
  for (std::size_t i = 1; i <= k; ++i) {
    t.images_x.push_back(PauliElement::single(k, i, 'X'));
    t.images_z.push_back(PauliElement::single(k, i, 'Z'));
  }
  return t;
}

LogicalTarget target_from_gates(std::size_t k, const std::vector<Gate>& gates) {
  Circuit c;
  c.m = k;
  for (const auto& g : gates) c.append(g);
  LogicalTarget t = LogicalTarget::identity(k);
  for (std::size_t i = 0; i < k; ++i) {
    t.images_x[i] = conjugate_circuit(c, t.images_x[i]);
    t.images_z[i] = conjugate_circuit(c, t.images_z[i]);
  }
  return t;
}

void check_target(const LogicalTarget& t) {
  if (t.images_x.size() != t.k || t.images_z.size() != t.k)
    throw InconsistentTarget("target needs k X images and k Z images");
  std::vector<PauliElement> all;
  for (auto& p : t.images_x) all.push_back(p);
  for (auto& p : t.images_z) all.push_back(p);
  for (auto& p : all) {
    if (p.m != t.k) throw InconsistentTarget("target image has wrong qubit count");
    if (!p.is_hermitian()) throw InconsistentTarget("target image has imaginary sign");
    if (p.is_identity_class()) throw InconsistentTarget("target image cannot be identity");
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      bool expect_anti = j == i + t.k && i < t.k;  // X_i with its own Z_i
      if (commutes(all[i], all[j]) == expect_anti)
        throw InconsistentTarget("target images break a commutation relation between " +
                                 std::to_string(i) + " and " + std::to_string(j));
    }
}

PauliElement expected_physical(const StabilizerCode& code, const PauliElement& logical) {
  if (logical.m != code.k) throw DimensionMismatch("logical Pauli has wrong qubit count");
  PauliElement out = PauliElement::identity(code.m);
  // i^s E(a,b) = i^{s + ab^T} X^{a}Z^{b}; replace each factor by its
  // physical representative in the same order.
  out.phase_exp = ((logical.phase_exp + logical.a.dot_int(logical.b)) % 4 + 4) % 4;
  for (std::size_t j = 0; j < code.k; ++j) {
    if (logical.a.get(j)) out = multiply(out, code.logical_x[j]);
    if (logical.b.get(j)) out = multiply(out, code.logical_z[j]);
  }
  return out;
}

namespace {

void check_stab_images(const StabilizerCode& code,
                       const std::vector<PauliElement>* stab_images) {
  if (!stab_images) return;
  if (stab_images->size() != code.r())
    throw InconsistentTarget("expected one image per stabilizer generator");
  for (auto& p : *stab_images) {
    if (p.m != code.m) throw InconsistentTarget("stabilizer image has wrong qubit count");
    if (!p.is_hermitian()) throw InconsistentTarget("stabilizer image has imaginary sign");
  }
}

const PauliElement& stab_image(const StabilizerCode& code,
                               const std::vector<PauliElement>* stab_images,
                               std::size_t j) {
  return stab_images ? (*stab_images)[j] : code.stabilizers[j];
}

}  // namespace

ConstraintSystem assemble(const StabilizerCode& code, const LogicalTarget& t,
                          const std::vector<PauliElement>* stab_images) {
  require_valid(code);
  if (t.k != code.k) throw InconsistentTarget("target logical qubit count differs from code");
  check_target(t);
  check_stab_images(code, stab_images);

  std::vector<F2Vector> xs, ys;
  for (std::size_t i = 0; i < code.k; ++i) {
    xs.push_back(code.logical_x[i].gamma());
    ys.push_back(expected_physical(code, t.images_x[i]).gamma());
    xs.push_back(code.logical_z[i].gamma());
    ys.push_back(expected_physical(code, t.images_z[i]).gamma());
  }
  for (std::size_t j = 0; j < code.r(); ++j) {
    xs.push_back(code.stabilizers[j].gamma());
    ys.push_back(stab_image(code, stab_images, j).gamma());
  }
  try {
    return build_system(xs, ys, code.m);
  } catch (const IncompatibleInnerProducts& e) {
    throw InconsistentTarget(e.what());
  }
}

void fix_signs(Circuit& c, const StabilizerCode& code, const LogicalTarget& t,
               const std::vector<PauliElement>* stab_images) {
  std::vector<std::pair<PauliElement, PauliElement>> constraints;  // source, expected
  for (std::size_t j = 0; j < code.r(); ++j)
    constraints.emplace_back(code.stabilizers[j], stab_image(code, stab_images, j));
  for (std::size_t i = 0; i < code.k; ++i) {
    constraints.emplace_back(code.logical_x[i], expected_physical(code, t.images_x[i]));
    constraints.emplace_back(code.logical_z[i], expected_physical(code, t.images_z[i]));
  }

  F2Matrix a(constraints.size(), 2 * code.m);
  F2Vector b(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    PauliElement actual = conjugate_circuit(c, constraints[i].first);
    const PauliElement& expected = constraints[i].second;
    if (actual.gamma() != expected.gamma())
      throw NoCorrection("circuit does not realize the required symplectic action");
    // A trailing Pauli with label g flips this image's sign iff <g, gamma> = 1.
    a.set_row(i, omega_apply(expected.gamma()));
    b.set(i, actual.phase_exp != expected.phase_exp);
  }
  auto sol = solve_affine(a, b);
  if (!sol) throw NoCorrection("sign-correction system is infeasible");
  F2Vector g = lex_min_affine(*sol);
  for (std::size_t q = 0; q < code.m; ++q) {
    bool x = g.get(q), z = g.get(code.m + q);
    if (x && z)
      c.append(make_gate(GateKind::Y, static_cast<int>(q) + 1));
    else if (x)
      c.append(make_gate(GateKind::X, static_cast<int>(q) + 1));
    else if (z)
      c.append(make_gate(GateKind::Z, static_cast<int>(q) + 1));
  }
}

VerifyReport verify(const Circuit& c, const StabilizerCode& code, const LogicalTarget& t,
                    const std::vector<PauliElement>* stab_images) {
  require_valid(code);
  if (t.k != code.k) throw InconsistentTarget("target logical qubit count differs from code");
  check_target(t);
  check_stab_images(code, stab_images);

  VerifyReport report;
  report.ok = true;
  auto add = [&](const std::string& name, const PauliElement& source,
                 const PauliElement& expected) {
    PauliElement actual = conjugate_circuit(c, source);
    ConstraintResult r;
    r.name = name;
    r.expected = format_pauli(expected);
    r.actual = format_pauli(actual);
    r.ok = actual == expected;
    report.ok = report.ok && r.ok;
    report.constraints.push_back(std::move(r));
  };
  for (std::size_t j = 0; j < code.r(); ++j)
    add("stabilizer " + std::to_string(j + 1), code.stabilizers[j],
        stab_image(code, stab_images, j));
  for (std::size_t i = 0; i < code.k; ++i) {
    add("logical X" + std::to_string(i + 1), code.logical_x[i],
        expected_physical(code, t.images_x[i]));
    add("logical Z" + std::to_string(i + 1), code.logical_z[i],
        expected_physical(code, t.images_z[i]));
  }
  return report;
}

std::vector<Solution> synthesize(const StabilizerCode& code, const LogicalTarget& t,
                                 const SynthOptions& options,
                                 const std::vector<PauliElement>* stab_images) {
  ConstraintSystem sys = assemble(code, t, stab_images);
  std::vector<Solution> out;
  if (options.mode == SolveMode::Count) return out;
  for (auto& f : solve_all(sys, options.mode, options.ceiling)) {
    Solution s;
    s.f = f;
    s.decomposition = decompose(f);
    s.circuit = lower_to_gates(s.decomposition);
    fix_signs(s.circuit, code, t, stab_images);
    if (!verify(s.circuit, code, t, stab_images).ok)
      throw Error("internal error: synthesized circuit fails verification");
    s.metric_values = metrics(s.circuit);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::uint64_t> metric_key(const CircuitMetrics& m, const Metric& metric) {
  switch (metric.kind) {
    case Metric::Kind::Depth:
      return {m.depth, m.two_qubit_count};
    case Metric::Kind::TwoQubitCount:
      return {m.two_qubit_count, m.depth};
    case Metric::Kind::TwoQubitDepth:
      return {m.depth_two_qubit, m.two_qubit_count};
    case Metric::Kind::AvoidQubits: {
      std::uint64_t hits = 0;
      for (int q : metric.avoid) hits += m.qubits_touched.count(q);
      return {hits, m.two_qubit_count};
    }
    case Metric::Kind::Lexicographic: {
      std::vector<std::uint64_t> key;
      for (const auto& part : metric.parts) {
        auto sub = metric_key(m, part);
        key.insert(key.end(), sub.begin(), sub.end());
      }
      return key;
    }
  }
  throw Error("unreachable metric kind");
}

std::vector<Solution> rank(std::vector<Solution> solutions, const Metric& metric) {
  std::stable_sort(solutions.begin(), solutions.end(),
                   [&](const Solution& a, const Solution& b) {
                     return metric_key(a.metric_values, metric) <
                            metric_key(b.metric_values, metric);
                   });
  return solutions;
}

Metric parse_metric(const std::string& text) {
  if (text == "depth") return Metric::depth();
  if (text == "2q") return Metric::two_qubit_count();
  if (text == "2qdepth") return Metric::two_qubit_depth();
  if (text.starts_with("avoid:")) {
    std::set<int> qs;
    std::string rest = text.substr(6);
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream is(rest);
    int q;
    while (is >> q) {
      if (q <= 0) throw ParseError("avoid: qubit indices are 1-based");
      qs.insert(q);
    }
    if (qs.empty()) throw ParseError("avoid: needs at least one qubit index");
    std::string extra;
    if (is.clear(), is >> extra) throw ParseError("bad avoid list in metric '" + text + "'");
    return Metric::avoid_qubits(std::move(qs));
  }
  if (text.starts_with("lex:")) {
    std::vector<Metric> parts;
    std::string rest = text.substr(4);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t next = rest.find('+', pos);
      if (next == std::string::npos) next = rest.size();
      parts.push_back(parse_metric(rest.substr(pos, next - pos)));
      pos = next + 1;
    }
    return Metric::lexicographic(std::move(parts));
  }
  throw ParseError("unknown metric '" + text + "'");
}

}  // namespace lcs
