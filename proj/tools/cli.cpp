#include "cli.hpp"

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabsym/apps.hpp"
#include "stabsym/graph_io.hpp"
#include "stabsym/oracle.hpp"
#include "stabsym/report_json.hpp"
#include "stabsym/symalgo.hpp"

namespace stabsym {

namespace {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input = "-";
  std::string format = "edgelist";
  std::string output = "json";
  double tolerance = 1e-9;
  std::size_t max_statevector = kStateVectorCap;
  std::size_t max_theorem6 = 24;
  std::size_t word_bound = 3;
  bool tolerance_set = false;

  std::size_t qubit = 0;
  double a = 0.5;
  long long generator = -1;
  int k_max = 2;
  bool dyadic = false;
  std::string h_file;
  long long extend = -1;
};

std::string read_all(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

GraphFormat to_format(const std::string& s) {
  if (s == "edgelist") return GraphFormat::EdgeList;
  if (s == "adjmatrix") return GraphFormat::AdjMatrix;
  return GraphFormat::Graph6;
}

Graph load_input_graph(const Config& cfg) {
  return parse_graph(read_all(cfg.input), to_format(cfg.format));
}

RootSearchOptions search_options(const Config& cfg) {
  RootSearchOptions opts;
  opts.statevector_cap = cfg.max_statevector;
  opts.tol = cfg.tolerance;
  opts.lc.order4_max_n = cfg.max_theorem6;
  return opts;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string phase_string(std::complex<double> phase) {
  return "exp(i*" + pi_fraction(std::arg(phase), 1e-7) + ")";
}

std::string edges_string(const Graph& g) {
  std::string s;
  for (auto [u, v] : g.edge_list()) {
    if (!s.empty()) s += " ";
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s.empty() ? "(none)" : s;
}

void print_report_text(std::ostream& out, const SymmetryGroupReport& r) {
  out << "graph: n=" << r.graph.n << " edges: " << edges_string(r.graph) << "\n";
  out << "classification: " << to_string(r.classification) << "\n";
  out << "in set T: " << (r.in_set_T ? "yes" : "no") << "\n";
  if (r.roots_symbolically_derived) out << "roots symbolically derived (statevector cap exceeded)\n";
  out << "stabilizer generators (" << r.stabilizer_generators.size() << "):\n";
  for (const PauliString& p : r.stabilizer_generators) out << "  " << p.to_string() << "\n";
  out << "LC generators (" << r.lc_generators.size() << "):\n";
  for (const LCSymmetry& s : r.lc_generators)
    out << "  [order " << s.order << "] " << s.local_factors().to_string() << "\n";
  out << "root generators (" << r.root_generators.size() << "):\n";
  for (const LocalSymmetry& s : r.root_generators) out << "  " << s.to_string() << "\n";
  out << "continuous generators (" << r.continuous.size() << "):\n";
  for (const ContinuousGenerator& c : r.continuous) out << "  " << c.to_string() << "\n";
}

int cmd_symmetries(const Config& cfg, std::ostream& out) {
  Graph g = load_input_graph(cfg);
  SymmetryGroupReport r = full_symmetry_group(g, search_options(cfg));
  if (cfg.output == "json")
    out << report_to_json(r).dump(2) << "\n";
  else
    print_report_text(out, r);
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  SymmetryGroupReport r;
  try {
    r = report_from_json(Json::parse(read_all(cfg.input)));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (r.graph.n > cfg.max_statevector)
    throw CapExceeded("verification needs a statevector on " + std::to_string(r.graph.n) +
                      " qubits; cap is " + std::to_string(cfg.max_statevector));
  StateVector base = build_graph_state(r.graph, cfg.max_statevector);

  struct Line {
    std::string label, display;
    bool ok;
    std::complex<double> phase;
  };
  std::vector<Line> lines;
  for (std::size_t i = 0; i < r.stabilizer_generators.size(); ++i) {
    const PauliString& p = r.stabilizer_generators[i];
    SymmetryCheck c = check_proportional(base, apply_pauli(p, base), cfg.tolerance);
    bool ok = c.ok && std::abs(c.phase - std::complex<double>(1.0)) <= 1e-7;
    lines.push_back({"stabilizer[" + std::to_string(i) + "]", p.to_string(), ok, c.phase});
  }
  for (std::size_t i = 0; i < r.lc_generators.size(); ++i) {
    const LCSymmetry& s = r.lc_generators[i];
    SymmetryCheck c = is_symmetry(r.graph, s.realize(), cfg.tolerance, cfg.max_statevector);
    lines.push_back({"lc[" + std::to_string(i) + "]", s.local_factors().to_string(), c.ok, c.phase});
  }
  for (std::size_t i = 0; i < r.root_generators.size(); ++i) {
    const LocalSymmetry& s = r.root_generators[i];
    SymmetryCheck c = is_symmetry(r.graph, s.realize(), cfg.tolerance, cfg.max_statevector);
    lines.push_back({"root[" + std::to_string(i) + "]", s.to_string(), c.ok, c.phase});
  }
  const double alpha = 0.6180339887498949;
  for (std::size_t i = 0; i < r.continuous.size(); ++i) {
    const ContinuousGenerator& c = r.continuous[i];
    SymmetryCheck chk = check_proportional(base, apply_local(c.realize(alpha), base), cfg.tolerance);
    lines.push_back({"continuous[" + std::to_string(i) + "]", c.to_string(), chk.ok, chk.phase});
  }

  bool all = true;
  for (const Line& l : lines) all = all && l.ok;
  if (cfg.output == "json") {
    Json j;
    j["schema"] = kReportSchema;
    Json results = Json::array();
    for (const Line& l : lines) {
      Json e;
      e["generator"] = l.label;
      e["display"] = l.display;
      e["ok"] = l.ok;
      e["phase"] = phase_string(l.phase);
      results.push_back(e);
    }
    j["results"] = results;
    j["all_pass"] = all;
    out << j.dump(2) << "\n";
  } else {
    for (const Line& l : lines)
      out << l.label << " " << (l.ok ? "pass" : "FAIL") << " phase=" << phase_string(l.phase)
          << "  " << l.display << "\n";
    out << (all ? "all generators pass" : "some generators FAIL") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_oracle(const Config& cfg, std::ostream& out) {
  Graph g = load_input_graph(cfg);
  if (g.n > cfg.max_statevector)
    throw CapExceeded("oracle needs a statevector on " + std::to_string(g.n) + " qubits");
  std::vector<std::string> displays;
  std::string kind;
  if (cfg.dyadic) {
    if (g.n > 4 || cfg.k_max > 3)
      throw CapExceeded("dyadic oracle supports n <= 4 and k-max <= 3");
    kind = "dyadic";
    for (const LocalSymmetry& s : brute_force_dyadic_symmetries(g, cfg.k_max))
      displays.push_back(s.to_string());
  } else {
    if (g.n > 5) throw CapExceeded("Clifford oracle supports n <= 5");
    kind = "clifford";
    for (const CliffordTuple& t : brute_force_lc_symmetries(g)) {
      LocalSymmetry ls;
      for (const SingleQubitClifford& c : t) ls.factors.push_back(clifford_to_factor(c));
      displays.push_back(ls.to_string());
    }
  }
  if (cfg.output == "json") {
    Json j;
    j["schema"] = kReportSchema;
    j["graph"] = graph_to_json(g);
    j["oracle"] = kind;
    j["count"] = displays.size();
    j["symmetries"] = displays;
    out << j.dump(2) << "\n";
  } else {
    out << kind << " oracle: " << displays.size() << " symmetries\n";
    for (const std::string& s : displays) out << "  " << s << "\n";
  }
  return 0;
}

int cmd_sep(const Config& cfg, std::ostream& out, std::ostream& err) {
  Graph g = load_input_graph(cfg);
  KrausSet ks = sep_transformation(g, cfg.qubit, cfg.a);
  // The map is assembled from stabilizer elements only; note when the graph
  // admits local symmetries beyond them. Advisory: never fails the command.
  if (g.n <= cfg.max_theorem6) {
    try {
      SymmetryGroupReport r = full_symmetry_group(g, search_options(cfg));
      if (r.classification != SymmetryClass::StabilizerOnly)
        err << "warning: local symmetry group is larger than the stabilizer group ("
            << to_string(r.classification) << "); the map uses stabilizer elements only\n";
    } catch (const std::exception&) {
    }
  }
  bool verified = g.n <= 10;
  double residual = verified ? ks.completeness_residual() : -1.0;
  std::vector<Eigen::Matrix2cd> H(g.n);
  for (std::size_t q = 0; q < g.n; ++q) {
    Eigen::Matrix2cd m = ks.target_h[q] * ks.target_h[q];
    H[q] = m;
  }
  bool obstructed = sep1_obstruction(g, H);
  if (cfg.output == "json") {
    Json j = kraus_to_json(ks);
    if (verified) j["completeness_residual"] = residual;
    j["sep1_obstructed"] = obstructed;
    out << j.dump(2) << "\n";
  } else {
    out << "SEP map on qubit " << cfg.qubit << " with a=" << fmt_double(cfg.a) << ": "
        << ks.operators.size() << " Kraus operators\n";
    if (verified) out << "completeness residual: " << fmt_double(residual) << "\n";
    out << "SEP1 obstructed: " << (obstructed ? "yes" : "no") << "\n";
    for (std::size_t k = 0; k < ks.operators.size(); ++k) {
      const KrausOperator& op = ks.operators[k];
      out << "  M[" << k << "] "
          << (op.kind == KrausOperator::Kind::Projector ? "projector" : "stabilizer")
          << " coefficient=" << fmt_double(op.coefficient);
      if (op.kind == KrausOperator::Kind::Stabilizer) out << " element=" << op.pauli.to_string();
      out << "\n";
    }
  }
  return 0;
}

/* Discrete gate candidates in report order: roots, order-4 LC, continuous at pi/4. */
std::vector<std::pair<std::string, LocalSymmetry>> code_candidates(const SymmetryGroupReport& r) {
  std::vector<std::pair<std::string, LocalSymmetry>> cands;
  for (std::size_t i = 0; i < r.root_generators.size(); ++i)
    cands.push_back({"root[" + std::to_string(i) + "]", r.root_generators[i]});
  for (std::size_t i = 0; i < r.lc_generators.size(); ++i)
    if (r.lc_generators[i].order == 4)
      cands.push_back({"lc[" + std::to_string(i) + "]", r.lc_generators[i].local_factors()});
  for (std::size_t i = 0; i < r.continuous.size(); ++i) {
    const ContinuousGenerator& c = r.continuous[i];
    LocalSymmetry u;
    for (std::size_t q = 0; q < c.n; ++q) u.factors.push_back(identity_factor());
    u.factors[c.a] =
        pauli_exp_factor(Pauli::I, c.axis_a(), FactorAngle::make_dyadic(DyadicAngle(1, 2)));
    if (c.kind != ContinuousKind::IsolatedVertex)
      u.factors[c.b] =
          pauli_exp_factor(Pauli::I, c.axis_b(), FactorAngle::make_dyadic(DyadicAngle(-1, 2)));
    cands.push_back({"continuous[" + std::to_string(i) + "] at 1/4*pi", u});
  }
  return cands;
}

int cmd_code(const Config& cfg, std::ostream& out) {
  Graph g = load_input_graph(cfg);
  SymmetryGroupReport r = full_symmetry_group(g, search_options(cfg));
  std::vector<std::pair<std::string, LocalSymmetry>> cands = code_candidates(r);
  if (cands.empty()) throw std::runtime_error("no non-Pauli symmetry generator to build a code from");

  std::string label;
  LocalSymmetry chosen;
  CodePair cp;
  if (cfg.generator >= 0) {
    if (static_cast<std::size_t>(cfg.generator) >= cands.size())
      throw ParseError("--generator out of range; " + std::to_string(cands.size()) +
                       " candidates available");
    label = cands[cfg.generator].first;
    chosen = cands[cfg.generator].second;
    cp = transversal_code(g, chosen, cfg.tolerance);
  } else {
    std::string last_error = "no candidates";
    bool found = false;
    for (const auto& [lab, u] : cands) {
      try {
        cp = transversal_code(g, u, cfg.tolerance);
        label = lab;
        chosen = u;
        found = true;
        break;
      } catch (const std::exception& e) {
        last_error = e.what();
      }
    }
    if (!found) throw std::runtime_error("no candidate admits a code: " + last_error);
  }

  Json extended;
  std::string extended_text;
  if (cfg.extend >= 0) {
    auto [g2, cp2] = extend_code(g, chosen, static_cast<std::size_t>(cfg.extend), cfg.tolerance);
    extended = code_pair_to_json(cp2);
    extended_text = "extended graph: n=" + std::to_string(g2.n) + " edges: " + edges_string(g2) +
                    "\nextended P: " + cp2.pauli_p.to_string() +
                    "\nextended alpha0: " + pi_fraction(cp2.alpha0, 1e-7);
  }

  if (cfg.output == "json") {
    Json j = code_pair_to_json(cp);
    j["generator"] = label;
    if (!extended.is_null()) j["extended"] = extended;
    out << j.dump(2) << "\n";
  } else {
    out << "code from " << label << ": " << cp.gate.to_string() << "\n";
    out << "|1>_L = P|G> with P = " << cp.pauli_p.to_string() << "\n";
    out << "alpha0 = " << pi_fraction(cp.alpha0, 1e-7) << ", sign = " << cp.sign << "\n";
    if (!extended_text.empty()) out << extended_text << "\n";
  }
  return 0;
}

int cmd_loccn(const Config& cfg, std::ostream& out) {
  Graph g = load_input_graph(cfg);
  if (cfg.h_file.empty()) throw ParseError("loccn requires --h-file with per-qubit matrices");
  std::vector<Eigen::Matrix2cd> H;
  try {
    Json j = Json::parse(read_all(cfg.h_file));
    if (!j.is_array()) throw ParseError("h-file: expected an array of 2x2 matrices");
    for (const Json& e : j) H.push_back(matrix_from_json(e));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("h-file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("h-file: ") + e.what());
  }
  SymmetryGroupReport r = full_symmetry_group(g, search_options(cfg));
  double tol = cfg.tolerance_set ? cfg.tolerance : 1e-10;
  LOCCNResult res = loccn_reachable(r, H, cfg.word_bound, tol);
  if (cfg.output == "json") {
    Json j = loccn_to_json(res);
    j["word_bound"] = cfg.word_bound;
    out << j.dump(2) << "\n";
  } else {
    if (res.reachable)
      out << "reachable: yes (pivot qubit " << res.pivot << ", word bound " << cfg.word_bound
          << ")\n";
    else
      out << "reachable: no symmetry word up to length " << cfg.word_bound
          << " isolates a single qubit\n";
  }
  return 0;
}

int cmd_projectors(const Config& cfg, std::ostream& out) {
  Graph g = load_input_graph(cfg);
  std::vector<PauliString> gens = canonical_generators(g.adj);
  long long idx = cfg.generator < 0 ? 0 : cfg.generator;
  if (static_cast<std::size_t>(idx) >= gens.size())
    throw ParseError("--generator out of range; graph has " + std::to_string(gens.size()) +
                     " generators");
  StabilizerGroup s(gens);
  ProjectorSet ps = annihilating_projectors(s, gens[idx]);

  std::vector<std::string> displays;
  for (const BitVector& f : ps.odd_f) {
    std::string d;
    std::size_t pos = 0;
    for (std::size_t q = 0; q < g.n; ++q) {
      if (!d.empty()) d += " (x) ";
      if (pos < ps.support.size() && ps.support[pos] == q) {
        d += std::string("(1 ") + (f.get(pos) ? "-" : "+") + " " +
             pauli_char(ps.source.letter(q)) + ")";
        ++pos;
      } else {
        d += "1";
      }
    }
    displays.push_back(d);
  }

  double max_norm = -1.0;
  if (g.n <= cfg.max_statevector) {
    StateVector base = build_graph_state(g, cfg.max_statevector);
    max_norm = 0.0;
    for (std::size_t k = 0; k < ps.size(); ++k)
      max_norm = std::max(max_norm, apply_local(ps.factors(k), base).norm());
  }

  if (cfg.output == "json") {
    Json j = projectors_to_json(ps);
    j["displays"] = displays;
    if (max_norm >= 0.0) j["max_applied_norm"] = max_norm;
    out << j.dump(2) << "\n";
  } else {
    out << "projectors annihilating the state, from " << ps.source.to_string() << ":\n";
    for (const std::string& d : displays) out << "  " << d << "\n";
    if (max_norm >= 0.0) out << "max applied norm: " << fmt_double(max_norm) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"local symmetry groups of graph states"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--input", cfg.input, "graph (or report) file; '-' for stdin");
  app.add_option("--format", cfg.format, "graph input format")
      ->check(CLI::IsMember({"edgelist", "adjmatrix", "graph6"}));
  app.add_option("--output", cfg.output, "output format")->check(CLI::IsMember({"json", "text"}));
  CLI::Option* tol_opt = app.add_option("--tolerance", cfg.tolerance, "numeric tolerance");
  app.add_option("--max-statevector", cfg.max_statevector, "statevector qubit cap");
  app.add_option("--max-theorem6", cfg.max_theorem6, "order-4 solver qubit cap");
  app.add_option("--word-bound", cfg.word_bound, "generator-word length bound");

  CLI::App* sub_symmetries = app.add_subcommand("symmetries", "full local symmetry group report");
  CLI::App* sub_verify = app.add_subcommand("verify", "re-check a JSON report against the oracle");
  CLI::App* sub_oracle = app.add_subcommand("oracle", "brute-force symmetry search");
  sub_oracle->add_flag("--dyadic", cfg.dyadic, "dyadic-angle oracle instead of Clifford");
  sub_oracle->add_option("--k-max", cfg.k_max, "max denominator exponent for --dyadic");
  CLI::App* sub_sep = app.add_subcommand("sep", "separable-map Kraus set for one generator");
  sub_sep->add_option("--qubit", cfg.qubit, "generator index j")->required();
  sub_sep->add_option("--a", cfg.a, "deformation parameter in (0,1)")->required();
  CLI::App* sub_code = app.add_subcommand("code", "transversal-gate code pair from a symmetry");
  sub_code->add_option("--generator", cfg.generator, "candidate gate index (default: first that works)");
  sub_code->add_option("--extend", cfg.extend, "attach a new vertex at this qubit");
  CLI::App* sub_loccn = app.add_subcommand("loccn", "finite-round LOCC reachability of h|G>");
  sub_loccn->add_option("--h-file", cfg.h_file, "JSON file with per-qubit 2x2 matrices");
  CLI::App* sub_projectors = app.add_subcommand("projectors", "annihilating projector set");
  sub_projectors->add_option("--generator", cfg.generator, "canonical generator index");
  for (CLI::App* sub :
       {sub_symmetries, sub_verify, sub_oracle, sub_sep, sub_code, sub_loccn, sub_projectors})
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("stabsym");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.tolerance_set = tol_opt->count() > 0;
  if (!(cfg.tolerance > 0 && cfg.tolerance < 1e-3)) {
    err << "error: --tolerance must lie in (0, 1e-3)\n";
    return 2;
  }
  if (cfg.max_statevector == 0 || cfg.max_theorem6 == 0) {
    err << "error: caps must be positive\n";
    return 2;
  }

  try {
    if (sub_symmetries->parsed()) return cmd_symmetries(cfg, out);
    if (sub_verify->parsed()) return cmd_verify(cfg, out);
    if (sub_oracle->parsed()) return cmd_oracle(cfg, out);
    if (sub_sep->parsed()) return cmd_sep(cfg, out, err);
    if (sub_code->parsed()) return cmd_code(cfg, out);
    if (sub_loccn->parsed()) return cmd_loccn(cfg, out);
    if (sub_projectors->parsed()) return cmd_projectors(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace stabsym
