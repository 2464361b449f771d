#include "stabsym/apps.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>
#include <string>

#include "stabsym/oracle.hpp"

namespace stabsym {
namespace {

constexpr double kPi = 3.14159265358979323846;

Pauli letter_mul(Pauli a, Pauli b) {
  return pauli_from_bits(x_bit(a) != x_bit(b), z_bit(a) != z_bit(b));
}

/* Lexicographically first Pauli (X < Y < Z) anticommuting with the axis. */
Pauli first_anticommuting(Pauli axis) { return axis == Pauli::X ? Pauli::Y : Pauli::X; }

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::Matrix2cd& b) {
  Eigen::MatrixXcd out(a.rows() * 2, a.cols() * 2);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

/* Dense matrix of (x)_q factors[q]; basis index bit q is qubit q. */
Eigen::MatrixXcd dense_local(const std::vector<Eigen::Matrix2cd>& factors) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Ones(1, 1);
  for (std::size_t q = factors.size(); q-- > 0;) acc = kron(acc, factors[q]);
  return acc;
}

void validate_local_positive(const std::vector<Eigen::Matrix2cd>& H, bool definite,
                             const char* who) {
  for (const Eigen::Matrix2cd& h : H) {
    if ((h - h.adjoint()).norm() > 1e-8)
      throw std::invalid_argument(std::string(who) + ": factor not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
    double lo = es.eigenvalues().minCoeff();
    if (definite ? lo <= 1e-12 : lo < -1e-9)
      throw std::invalid_argument(std::string(who) + ": factor not positive");
  }
}

/* Pauli letters of p multiplied into the factors of u; phases are dropped. */
LocalSymmetry pauli_times_symmetry(const PauliString& p, const LocalSymmetry& u) {
  LocalSymmetry out = u;
  for (std::size_t q = 0; q < u.size(); ++q) {
    Pauli s = p.letter(q);
    if (s == Pauli::I) continue;
    LocalFactor& f = out.factors[q];
    switch (f.kind) {
      case LocalFactor::Kind::Identity: f = pauli_factor(s); break;
      case LocalFactor::Kind::PauliOnly: f = pauli_factor(letter_mul(s, f.sigma1)); break;
      case LocalFactor::Kind::PauliExp:
        f = pauli_exp_factor(letter_mul(s, f.sigma1), f.sigma2, f.angle);
        break;
      case LocalFactor::Kind::CliffordOrder3:
        throw std::logic_error("pauli_times_symmetry: order-3 factor");
    }
  }
  return out;
}

/* Canonical key of a unitary tuple up to per-factor phase. */
std::string tuple_key(const std::vector<Eigen::Matrix2cd>& fac) {
  std::string out;
  char buf[40];
  for (const Eigen::Matrix2cd& f : fac) {
    std::complex<double> ref{0.0, 0.0};
    double mx = 0.0;
    for (int i = 0; i < 4; ++i) mx = std::max(mx, std::abs(f(i / 2, i % 2)));
    for (int i = 0; i < 4 && std::abs(ref) == 0.0; ++i)
      if (std::abs(f(i / 2, i % 2)) >= 0.5 * mx) ref = f(i / 2, i % 2);
    std::complex<double> ph = ref / std::abs(ref);
    for (int i = 0; i < 4; ++i) {
      std::complex<double> v = f(i / 2, i % 2) / ph;
      double re = std::round(v.real() * 1e5) / 1e5;
      double im = std::round(v.imag() * 1e5) / 1e5;
      if (re == 0.0) re = 0.0;
      if (im == 0.0) im = 0.0;
      std::snprintf(buf, sizeof buf, "%.5f,%.5f;", re, im);
      out += buf;
    }
    out += '|';
  }
  return out;
}

}  // namespace

std::vector<Eigen::Matrix2cd> ProjectorSet::factors(std::size_t k) const {
  std::vector<Eigen::Matrix2cd> out(source.n, Eigen::Matrix2cd::Identity());
  const BitVector& f = odd_f.at(k);
  double global = source.phase_exp == 2 ? -1.0 : 1.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    double sgn = (i == 0 ? global : 1.0) * (f.get(i) ? -1.0 : 1.0);
    out[support[i]] = Eigen::Matrix2cd::Identity() + sgn * pauli_matrix_2x2(source.letter(support[i]));
  }
  return out;
}

ProjectorSet annihilating_projectors(const StabilizerGroup& s, const PauliString& element) {
  if (element.n != s.num_qubits())
    throw std::invalid_argument("annihilating_projectors: size mismatch");
  if (element.phase_exp & 1)
    throw std::invalid_argument("annihilating_projectors: element not Hermitian");
  if (!s.contains(element))
    throw std::invalid_argument("annihilating_projectors: element not in the group");
  ProjectorSet out;
  out.source = element;
  for (std::size_t q = 0; q < element.n; ++q)
    if (element.letter(q) != Pauli::I) out.support.push_back(q);
  const std::size_t k = out.support.size();
  if (k < 2) throw std::invalid_argument("annihilating_projectors: support smaller than 2");
  if (k > 24) throw std::invalid_argument("annihilating_projectors: support too large");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    BitVector f(k);
    for (std::size_t i = 0; i < k; ++i) f.set(i, (mask >> i) & 1);
    out.odd_f.push_back(std::move(f));
  }
  return out;
}

double KrausSet::completeness_residual(std::size_t cap) const {
  const std::size_t n = graph.n;
  if (n > cap) throw std::invalid_argument("completeness_residual: graph too large");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (const KrausOperator& op : operators) {
    Eigen::MatrixXcd m = op.coefficient * dense_local(op.factors);
    acc += m.adjoint() * m;
  }
  return (acc - Eigen::MatrixXcd::Identity(dim, dim)).norm();
}

KrausSet sep_transformation(const Graph& g, std::size_t j, double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("sep_transformation: need 0 < a < 1");
  if (j >= g.n) throw std::invalid_argument("sep_transformation: qubit out of range");
  if (g.n < 3 || !is_connected(g))
    throw std::invalid_argument("sep_transformation: graph must be connected with n >= 3");

  std::vector<PauliString> gens = canonical_generators(g.adj);
  const PauliString& sj = gens[j];
  std::vector<std::size_t> supp;
  for (std::size_t q = 0; q < g.n; ++q)
    if (sj.letter(q) != Pauli::I) supp.push_back(q);
  const std::size_t nj = supp.size();
  if (nj > 24) throw std::invalid_argument("sep_transformation: support too large");

  KrausSet set;
  set.graph = g;
  set.qubit = j;
  set.a = a;
  set.target_h.assign(g.n, Eigen::Matrix2cd::Identity());
  for (std::size_t q : supp) {
    Eigen::Matrix2cd sig = pauli_matrix_2x2(sj.letter(q));
    Eigen::Matrix2cd hp = 0.5 * (Eigen::Matrix2cd::Identity() + sig);
    Eigen::Matrix2cd hm = 0.5 * (Eigen::Matrix2cd::Identity() - sig);
    Eigen::Matrix2cd h = std::sqrt(1.0 + a) * hp + std::sqrt(1.0 - a) * hm;
    set.target_h[q] = h;
  }

  const double an = std::pow(a, double(nj));
  /* annihilating half: h * Q_{S_(j)}^f over odd-weight f */
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nj); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    KrausOperator op;
    op.kind = KrausOperator::Kind::Projector;
    op.f = BitVector(nj);
    for (std::size_t i = 0; i < nj; ++i) op.f.set(i, (mask >> i) & 1);
    const std::size_t q0 = nj - std::popcount(mask); /* zeros of f */
    op.coefficient = std::sqrt(an / std::pow(2.0, double(2 * nj - 1)) /
                               ((1.0 + an) * std::pow(1.0 + a, double(q0)) *
                                std::pow(1.0 - a, double(nj - q0))));
    op.factors.assign(g.n, Eigen::Matrix2cd::Identity());
    for (std::size_t i = 0; i < nj; ++i) {
      double sgn = op.f.get(i) ? -1.0 : 1.0;
      Eigen::Matrix2cd q = Eigen::Matrix2cd::Identity() + sgn * pauli_matrix_2x2(sj.letter(supp[i]));
      Eigen::Matrix2cd hq = set.target_h[supp[i]] * q;
      op.factors[supp[i]] = hq;
    }
    set.operators.push_back(std::move(op));
  }

  /* invertible half: h * P over the neighbour-generator subgroup */
  StabilizerGroup group(gens);
  std::vector<std::size_t> nb = g.neighbor_list(j);
  const double coef = 1.0 / std::sqrt(std::pow(2.0, double(nj - 1)) * (1.0 + an));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb.size()); ++mask) {
    BitVector e(g.n);
    for (std::size_t i = 0; i < nb.size(); ++i) e.set(nb[i], (mask >> i) & 1);
    PauliString p = group.product(e);
    if (p.phase_exp & 1) throw std::logic_error("sep_transformation: non-Hermitian product");
    KrausOperator op;
    op.kind = KrausOperator::Kind::Stabilizer;
    op.pauli = p;
    op.coefficient = coef;
    op.factors.assign(g.n, Eigen::Matrix2cd::Identity());
    for (std::size_t q = 0; q < g.n; ++q) {
      Eigen::Matrix2cd pm = pauli_matrix_2x2(p.letter(q));
      if (q == 0 && p.phase_exp == 2) pm = -pm;
      Eigen::Matrix2cd hq = set.target_h[q] * pm;
      op.factors[q] = hq;
    }
    set.operators.push_back(std::move(op));
  }
  return set;
}

bool sep1_obstruction(const Graph& g, const std::vector<Eigen::Matrix2cd>& H, double tol) {
  if (H.size() != g.n) throw std::invalid_argument("sep1_obstruction: size mismatch");
  if (g.n > 24) throw std::invalid_argument("sep1_obstruction: graph too large");
  validate_local_positive(H, false, "sep1_obstruction");
  std::vector<std::array<std::complex<double>, 4>> tr(g.n);
  for (std::size_t q = 0; q < g.n; ++q)
    for (int p = 0; p < 4; ++p)
      tr[q][p] = (H[q] * pauli_matrix_2x2(static_cast<Pauli>(p))).trace();
  StabilizerGroup group(canonical_generators(g.adj));
  const std::complex<double> iunit(0.0, 1.0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n); ++mask) {
    BitVector e(g.n);
    for (std::size_t i = 0; i < g.n; ++i) e.set(i, (mask >> i) & 1);
    PauliString p = group.product(e);
    std::complex<double> val = std::pow(iunit, p.phase_exp);
    for (std::size_t q = 0; q < g.n; ++q) val *= tr[q][static_cast<int>(p.letter(q))];
    if (std::abs(val) > tol) return true;
  }
  return false;
}

CodePair transversal_code(const Graph& g, const LocalSymmetry& u, double tol) {
  const std::size_t n = g.n;
  if (u.size() != n) throw std::invalid_argument("transversal_code: size mismatch");
  for (const LocalFactor& f : u.factors) {
    if (f.kind == LocalFactor::Kind::CliffordOrder3)
      throw std::invalid_argument("transversal_code: order-3 Clifford factor");
    if (f.kind == LocalFactor::Kind::PauliExp &&
        (f.angle.kind == FactorAngle::Kind::Free || f.angle.kind == FactorAngle::Kind::Complex))
      throw std::invalid_argument("transversal_code: gate must have concrete real angles");
  }
  StateVector base = build_graph_state(g);
  SymmetryCheck chk = check_proportional(base, apply_local(u.realize(), base), tol);
  if (!chk.ok) throw std::invalid_argument("transversal_code: not a symmetry");
  if (std::abs(std::sin(std::arg(chk.phase))) < 1e-7)
    throw std::invalid_argument("transversal_code: phase is a multiple of pi (logical identity)");

  StabilizerGroup group(canonical_generators(g.adj));
  const std::uint64_t limit = std::uint64_t{1} << std::min<std::size_t>(n, 16);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    LocalSymmetry cand = u;
    if (mask) {
      BitVector e(n);
      for (std::size_t i = 0; i < n; ++i) e.set(i, (mask >> i) & 1);
      cand = pauli_times_symmetry(group.product(e), u);
    }
    std::vector<Eigen::Matrix2cd> fc = cand.realize();
    SymmetryCheck c2 = check_proportional(base, apply_local(fc, base), tol);
    if (!c2.ok) continue;
    const double a0 = std::arg(c2.phase);
    if (std::abs(std::sin(a0)) < 1e-7) continue;

    /* logical X: anticommutes with the axis where the Pauli part is trivial
     * or equals the axis, trivial elsewhere */
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) {
      const LocalFactor& f = cand.factors[q];
      if (f.kind != LocalFactor::Kind::PauliExp) continue;
      if (f.sigma1 == Pauli::I || f.sigma1 == f.sigma2)
        p.set_letter(q, first_anticommuting(f.sigma2));
    }
    if (p.is_identity_content()) continue;
    if (group.member(p).has_value()) continue; /* <G|P|G> would not vanish */

    StateVector one = apply_pauli(p, base);
    std::complex<double> ov = base.amplitudes.dot(one.amplitudes);
    if (std::abs(ov) > 1e-10 * base.norm() * one.norm()) continue;
    StateVector v = apply_local(fc, one);
    std::complex<double> c = one.amplitudes.dot(v.amplitudes) / std::norm(one.norm());
    std::complex<double> want = std::exp(std::complex<double>(0.0, -a0));
    int sign = std::real(c / want) >= 0.0 ? 1 : -1;
    if (std::abs(c - double(sign) * want) > 50 * tol) continue;
    Eigen::VectorXcd diff = v.amplitudes - c * one.amplitudes;
    if (diff.norm() > 50 * tol * one.norm()) continue;
    return CodePair{g, p, cand, a0, sign};
  }
  throw std::runtime_error("transversal_code: no valid logical Pauli found");
}

std::pair<Graph, CodePair> extend_code(const Graph& g, const LocalSymmetry& u, std::size_t j,
                                       double tol) {
  if (u.size() != g.n) throw std::invalid_argument("extend_code: size mismatch");
  if (j >= g.n) throw std::invalid_argument("extend_code: qubit out of range");
  const LocalFactor& f = u.factors[j];
  const bool diagonal =
      (f.kind == LocalFactor::Kind::PauliExp && f.sigma2 == Pauli::Z &&
       (f.sigma1 == Pauli::I || f.sigma1 == Pauli::Z)) ||
      (f.kind == LocalFactor::Kind::PauliOnly && f.sigma1 == Pauli::Z);
  if (!diagonal)
    throw std::invalid_argument("extend_code: attachment qubit must carry a Z rotation axis");

  Graph g2(g.n + 1);
  for (const auto& e : g.edge_list()) g2.add_edge(e.first, e.second);
  g2.add_edge(j, g.n);
  LocalSymmetry u2 = u;
  u2.factors.push_back(identity_factor());
  if (!is_symmetry(g2, u2.realize(), tol).ok)
    throw std::logic_error("extend_code: extended gate lost the symmetry");
  return {g2, transversal_code(g2, u2, tol)};
}

LOCCNResult loccn_reachable(const SymmetryGroupReport& report,
                            const std::vector<Eigen::Matrix2cd>& H, std::size_t word_bound,
                            double tol) {
  const std::size_t n = report.graph.n;
  if (H.size() != n) throw std::invalid_argument("loccn_reachable: size mismatch");
  validate_local_positive(H, true, "loccn_reachable");

  std::vector<std::vector<Eigen::Matrix2cd>> gens;
  for (const PauliString& p : report.stabilizer_generators) {
    std::vector<Eigen::Matrix2cd> t(n);
    for (std::size_t q = 0; q < n; ++q) t[q] = pauli_matrix_2x2(p.letter(q));
    gens.push_back(std::move(t));
  }
  for (const LCSymmetry& s : report.lc_generators) gens.push_back(s.realize());
  for (const LocalSymmetry& s : report.root_generators) gens.push_back(s.realize());

  LOCCNResult res;
  if (gens.empty()) return res;

  auto qualifies = [&](const std::vector<Eigen::Matrix2cd>& t, std::size_t& pivot) {
    std::size_t hits = 0;
    for (std::size_t q = 0; q < n; ++q) {
      double c = (H[q] * t[q] - t[q] * H[q]).norm();
      if (c > 1e-6) {
        ++hits;
        pivot = q;
      } else if (c > tol) {
        return false; /* ambiguous commutator */
      }
    }
    return hits == 1;
  };

  std::vector<Eigen::Matrix2cd> id(n, Eigen::Matrix2cd::Identity());
  std::set<std::string> seen{tuple_key(id)};
  std::vector<std::vector<Eigen::Matrix2cd>> frontier{id};
  for (std::size_t len = 1; len <= word_bound; ++len) {
    std::vector<std::vector<Eigen::Matrix2cd>> next;
    for (const std::vector<Eigen::Matrix2cd>& cur : frontier)
      for (const std::vector<Eigen::Matrix2cd>& gtup : gens) {
        std::vector<Eigen::Matrix2cd> prod(n);
        for (std::size_t q = 0; q < n; ++q) prod[q] = gtup[q] * cur[q];
        if (!seen.insert(tuple_key(prod)).second) continue;
        std::size_t pivot = 0;
        if (qualifies(prod, pivot)) {
          res.reachable = true;
          res.pivot = pivot;
          res.witness = prod;
          return res;
        }
        next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  return res;
}

}  // namespace stabsym
