#include "stabsym/report_json.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace stabsym {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("report: " + what);
}

Pauli pauli_from_json(const Json& j) {
  std::string s = j.get<std::string>();
  if (s.size() == 1)
    if (auto p = pauli_from_char(s[0])) return *p;
  bad("invalid Pauli letter '" + s + "'");
}

PauliString pauli_string_from_json(const Json& j) {
  auto p = PauliString::parse(j.get<std::string>());
  if (!p) bad("invalid Pauli string '" + j.get<std::string>() + "'");
  return *p;
}

Json angle_to_json(const FactorAngle& a) {
  Json j;
  switch (a.kind) {
    case FactorAngle::Kind::Dyadic:
      j["kind"] = "dyadic";
      j["m"] = a.dyadic.m;
      j["k"] = a.dyadic.k;
      break;
    case FactorAngle::Kind::Real:
      j["kind"] = "real";
      j["value"] = a.real;
      break;
    case FactorAngle::Kind::Complex:
      j["kind"] = "complex";
      j["value"] = Json::array({a.cplx.real(), a.cplx.imag()});
      break;
    case FactorAngle::Kind::Free:
      j["kind"] = "free";
      j["sign"] = a.free_sign;
      break;
  }
  return j;
}

FactorAngle angle_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "dyadic")
    return FactorAngle::make_dyadic(DyadicAngle(j.at("m").get<long long>(), j.at("k").get<int>()));
  if (kind == "real") return FactorAngle::make_real(j.at("value").get<double>());
  if (kind == "complex")
    return FactorAngle::make_complex(
        {j.at("value").at(0).get<double>(), j.at("value").at(1).get<double>()});
  if (kind == "free") return FactorAngle::make_free(j.at("sign").get<int>());
  bad("unknown angle kind '" + kind + "'");
}

Json continuous_to_json(const ContinuousGenerator& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["a"] = c.a;
  j["b"] = c.b;
  j["n"] = c.n;
  j["axis_a"] = std::string(1, pauli_char(c.axis_a()));
  j["axis_b"] = std::string(1, pauli_char(c.axis_b()));
  j["display"] = c.to_string();
  return j;
}

ContinuousGenerator continuous_from_json(const Json& j) {
  ContinuousGenerator c;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "leaf-parent")
    c.kind = ContinuousKind::LeafParent;
  else if (kind == "twins")
    c.kind = ContinuousKind::Twins;
  else if (kind == "connected-twins")
    c.kind = ContinuousKind::ConnectedTwins;
  else if (kind == "isolated")
    c.kind = ContinuousKind::IsolatedVertex;
  else
    bad("unknown continuous kind '" + kind + "'");
  c.a = j.at("a").get<std::size_t>();
  c.b = j.at("b").get<std::size_t>();
  c.n = j.at("n").get<std::size_t>();
  return c;
}

Json lc_to_json(const LCSymmetry& s) {
  Json j;
  j["order"] = s.order;
  Json idx = Json::array();
  for (const SingleQubitClifford& c : s.factors) idx.push_back(c.index());
  j["clifford_indices"] = idx;
  j["pauli_correction"] = s.pauli_correction.to_string();
  j["display"] = s.local_factors().to_string();
  return j;
}

LCSymmetry lc_from_json(const Json& j) {
  LCSymmetry s;
  s.order = j.at("order").get<int>();
  if (s.order != 3 && s.order != 4) bad("LC generator order must be 3 or 4");
  for (const Json& e : j.at("clifford_indices")) {
    int idx = e.get<int>();
    if (idx < 0 || idx >= 24) bad("Clifford index out of range");
    s.factors.push_back(clifford_from_class_and_pauli(idx / 4, static_cast<Pauli>(idx % 4)));
  }
  s.pauli_correction = pauli_string_from_json(j.at("pauli_correction"));
  return s;
}

SymmetryClass class_from_json(const Json& j) {
  std::string s = j.get<std::string>();
  if (s == "stabilizer-only") return SymmetryClass::StabilizerOnly;
  if (s == "LC-only") return SymmetryClass::LCOnly;
  if (s == "finite-discrete") return SymmetryClass::FiniteDiscrete;
  if (s == "continuous") return SymmetryClass::Continuous;
  bad("unknown classification '" + s + "'");
}

}  // namespace

std::string pi_fraction(double alpha, double tol) {
  constexpr double pi = std::numbers::pi;
  double q = alpha / pi;
  for (long long den = 1; den <= (1LL << 20); den *= 2) {
    double scaled = q * double(den);
    double r = std::round(scaled);
    if (std::abs(scaled - r) * pi / double(den) <= tol) {
      long long num = static_cast<long long>(r);
      if (num == 0) return "0";
      long long g = std::gcd(num < 0 ? -num : num, den);
      num /= g;
      long long d = den / g;
      if (d > 1) return std::to_string(num) + "/" + std::to_string(d) + "*pi";
      if (num == 1) return "pi";
      if (num == -1) return "-pi";
      return std::to_string(num) + "*pi";
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", alpha);
  return buf;
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const Json& j) {
  std::size_t n = j.at("n").get<std::size_t>();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const Json& e : j.at("edges")) {
    std::size_t u = e.at(0).get<std::size_t>(), v = e.at(1).get<std::size_t>();
    if (u >= n || v >= n || u == v) bad("edge out of range");
    edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Json local_factor_to_json(const LocalFactor& f) {
  Json j;
  switch (f.kind) {
    case LocalFactor::Kind::Identity:
      j["kind"] = "identity";
      break;
    case LocalFactor::Kind::PauliOnly:
      j["kind"] = "pauli";
      j["sigma1"] = std::string(1, pauli_char(f.sigma1));
      break;
    case LocalFactor::Kind::PauliExp:
      j["kind"] = "pauli-exp";
      j["sigma1"] = std::string(1, pauli_char(f.sigma1));
      j["sigma2"] = std::string(1, pauli_char(f.sigma2));
      j["angle"] = angle_to_json(f.angle);
      break;
    case LocalFactor::Kind::CliffordOrder3:
      j["kind"] = "clifford3";
      j["index"] = f.c3.index();
      break;
  }
  j["display"] = f.to_string();
  return j;
}

LocalFactor local_factor_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "identity") return identity_factor();
  if (kind == "pauli") return pauli_factor(pauli_from_json(j.at("sigma1")));
  if (kind == "pauli-exp")
    return pauli_exp_factor(pauli_from_json(j.at("sigma1")), pauli_from_json(j.at("sigma2")),
                            angle_from_json(j.at("angle")));
  if (kind == "clifford3") {
    int idx = j.at("index").get<int>();
    if (idx < 0 || idx >= 24) bad("Clifford index out of range");
    return clifford_order3_factor(clifford_from_class_and_pauli(idx / 4, static_cast<Pauli>(idx % 4)));
  }
  bad("unknown factor kind '" + kind + "'");
}

Json local_symmetry_to_json(const LocalSymmetry& u) {
  Json j;
  Json fs = Json::array();
  for (const LocalFactor& f : u.factors) fs.push_back(local_factor_to_json(f));
  j["factors"] = fs;
  j["display"] = u.to_string();
  return j;
}

LocalSymmetry local_symmetry_from_json(const Json& j) {
  LocalSymmetry u;
  for (const Json& f : j.at("factors")) u.factors.push_back(local_factor_from_json(f));
  return u;
}

Json report_to_json(const SymmetryGroupReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["graph"] = graph_to_json(r.graph);
  j["classification"] = to_string(r.classification);
  j["in_set_t"] = r.in_set_T;
  j["roots_symbolically_derived"] = r.roots_symbolically_derived;
  Json stab = Json::array();
  for (const PauliString& s : r.stabilizer_generators) stab.push_back(s.to_string());
  j["stabilizer_generators"] = stab;
  Json lc = Json::array();
  for (const LCSymmetry& s : r.lc_generators) lc.push_back(lc_to_json(s));
  j["lc_generators"] = lc;
  Json roots = Json::array();
  for (const LocalSymmetry& s : r.root_generators) roots.push_back(local_symmetry_to_json(s));
  j["root_generators"] = roots;
  Json cont = Json::array();
  for (const ContinuousGenerator& c : r.continuous) cont.push_back(continuous_to_json(c));
  j["continuous_generators"] = cont;
  return j;
}

SymmetryGroupReport report_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("schema")) bad("missing schema key");
  if (j.at("schema").get<std::string>() != kReportSchema)
    bad("unsupported schema '" + j.at("schema").get<std::string>() + "'");
  SymmetryGroupReport r;
  r.graph = graph_from_json(j.at("graph"));
  r.classification = class_from_json(j.at("classification"));
  r.in_set_T = j.at("in_set_t").get<bool>();
  r.roots_symbolically_derived = j.at("roots_symbolically_derived").get<bool>();
  for (const Json& s : j.at("stabilizer_generators"))
    r.stabilizer_generators.push_back(pauli_string_from_json(s));
  for (const Json& s : j.at("lc_generators")) r.lc_generators.push_back(lc_from_json(s));
  for (const Json& s : j.at("root_generators"))
    r.root_generators.push_back(local_symmetry_from_json(s));
  for (const Json& s : j.at("continuous_generators"))
    r.continuous.push_back(continuous_from_json(s));
  return r;
}

Json matrix_to_json(const Eigen::Matrix2cd& m) {
  Json rows = Json::array();
  for (int i = 0; i < 2; ++i) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) row.push_back(Json::array({m(i, c).real(), m(i, c).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Eigen::Matrix2cd matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("matrix must have two rows");
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != 2) bad("matrix row must have two entries");
    for (int c = 0; c < 2; ++c) {
      const Json& e = j.at(i).at(c);
      if (e.is_number())
        m(i, c) = e.get<double>();
      else if (e.is_array() && e.size() == 2)
        m(i, c) = std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>());
      else
        bad("matrix entry must be a number or [re, im]");
    }
  }
  return m;
}

Json kraus_to_json(const KrausSet& ks) {
  Json j;
  j["schema"] = kReportSchema;
  j["graph"] = graph_to_json(ks.graph);
  j["qubit"] = ks.qubit;
  j["a"] = ks.a;
  Json th = Json::array();
  for (const Eigen::Matrix2cd& m : ks.target_h) th.push_back(matrix_to_json(m));
  j["target_h"] = th;
  Json ops = Json::array();
  for (const KrausOperator& op : ks.operators) {
    Json o;
    o["kind"] = op.kind == KrausOperator::Kind::Projector ? "projector" : "stabilizer";
    o["coefficient"] = op.coefficient;
    std::string fbits;
    for (std::size_t i = 0; i < op.f.size(); ++i) fbits += op.f.get(i) ? '1' : '0';
    o["f"] = fbits;
    o["pauli"] = op.pauli.to_string();
    Json fac = Json::array();
    for (const Eigen::Matrix2cd& m : op.factors) fac.push_back(matrix_to_json(m));
    o["factors"] = fac;
    ops.push_back(o);
  }
  j["operators"] = ops;
  return j;
}

Json code_pair_to_json(const CodePair& cp) {
  Json j;
  j["schema"] = kReportSchema;
  j["graph"] = graph_to_json(cp.graph);
  j["pauli_p"] = cp.pauli_p.to_string();
  j["gate"] = local_symmetry_to_json(cp.gate);
  j["alpha0"] = cp.alpha0;
  j["alpha0_display"] = pi_fraction(cp.alpha0);
  j["sign"] = cp.sign;
  return j;
}

Json projectors_to_json(const ProjectorSet& ps) {
  Json j;
  j["schema"] = kReportSchema;
  j["source"] = ps.source.to_string();
  j["support"] = ps.support;
  Json fs = Json::array();
  for (const BitVector& f : ps.odd_f) {
    std::string bits;
    for (std::size_t i = 0; i < f.size(); ++i) bits += f.get(i) ? '1' : '0';
    fs.push_back(bits);
  }
  j["odd_f"] = fs;
  return j;
}

Json loccn_to_json(const LOCCNResult& res) {
  Json j;
  j["schema"] = kReportSchema;
  j["reachable"] = res.reachable;
  if (res.reachable) {
    j["pivot"] = res.pivot;
    Json w = Json::array();
    for (const Eigen::Matrix2cd& m : res.witness) w.push_back(matrix_to_json(m));
    j["witness"] = w;
  }
  return j;
}

}  // namespace stabsym
