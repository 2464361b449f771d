#include "stabsym/symalgo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace stabsym {

namespace {

/* exp(-i pi/4 X): X -> X, Z -> -Y; exp(+i pi/4 Z): X -> -Y, Z -> Z.
 * These are the exact conjugation actions of the factors of lc_unitary. */
const SingleQubitClifford kLcVertex{Pauli::X, false, Pauli::Y, true};
const SingleQubitClifford kLcNeighbor{Pauli::Y, true, Pauli::Z, false};

std::vector<Pauli> sigma_letters(const LCSymmetry& sym) {
  LCBinaryOp op = sym.binary_op();
  std::size_t n = sym.factors.size();
  std::vector<Pauli> out(n, Pauli::I);
  for (std::size_t j = 0; j < n; ++j) out[j] = pauli_from_bits(op.c.get(j), op.b.get(j));
  return out;
}

BitVector leaf_c_vector(const LeafStructure& ls, std::size_t n) {
  BitVector c(n);
  c.set(ls.a, true);
  if (ls.kind != LeafKind::LeafParent) c.set(ls.b, true);
  return c;
}

std::size_t support_size(const LocalSymmetry& s) {
  std::size_t w = 0;
  for (const LocalFactor& f : s.factors)
    if (f.kind != LocalFactor::Kind::Identity) ++w;
  return w;
}

std::size_t support_size(const LCSymmetry& s) {
  std::size_t w = 0;
  CliffordTuple t = s.total_action();
  for (const SingleQubitClifford& c : t)
    if (!c.is_identity()) ++w;
  return w;
}

void sort_lc_generators(std::vector<LCSymmetry>& gens) {
  std::sort(gens.begin(), gens.end(), [](const LCSymmetry& a, const LCSymmetry& b) {
    auto key = [](const LCSymmetry& s) {
      return std::make_tuple(s.order == 4 ? 1 : 0, support_size(s), s.local_factors().to_string());
    };
    return key(a) < key(b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

void sort_roots(std::vector<LocalSymmetry>& roots) {
  std::sort(roots.begin(), roots.end(), [](const LocalSymmetry& a, const LocalSymmetry& b) {
    return std::make_tuple(support_size(a), a.to_string()) <
           std::make_tuple(support_size(b), b.to_string());
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

void sort_continuous(std::vector<ContinuousGenerator>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ContinuousGenerator& x, const ContinuousGenerator& y) {
              return std::make_tuple(static_cast<int>(x.kind), x.a, x.b) <
                     std::make_tuple(static_cast<int>(y.kind), y.a, y.b);
            });
}

int class_rank(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::StabilizerOnly: return 0;
    case SymmetryClass::LCOnly: return 1;
    case SymmetryClass::FiniteDiscrete: return 2;
    case SymmetryClass::Continuous: return 3;
  }
  return 0;
}

/* Oracle-backed report for a single vertex or an edge; the structural solvers
 * need n >= 3 (an edge admits both order-3 factors and continuous families). */
SymmetryGroupReport small_graph_report(const Graph& g) {
  SymmetryGroupReport r;
  r.graph = g;
  r.stabilizer_generators = g.stabilizer_generators();
  if (g.n == 1) {
    r.continuous.push_back(ContinuousGenerator{ContinuousKind::IsolatedVertex, 0, 0, 1});
  } else {
    r.continuous = leaf_symmetry_generators(g);
  }
  /* One representative tuple per symplectic class pattern. */
  std::map<std::vector<int>, CliffordTuple> by_class;
  for (const CliffordTuple& t : brute_force_lc_symmetries(g)) {
    std::vector<int> cls(t.size());
    bool pauli_only = true;
    for (std::size_t j = 0; j < t.size(); ++j) {
      cls[j] = t[j].class_index();
      pauli_only = pauli_only && cls[j] == 0;
    }
    if (pauli_only) continue;
    by_class.emplace(cls, t);
  }
  bool has_order3 = false;
  for (const auto& [cls, t] : by_class) {
    LCSymmetry s;
    s.factors = t;
    s.pauli_correction = PauliString(g.n);
    s.order = std::any_of(cls.begin(), cls.end(), [](int c) { return c >= 4; }) ? 3 : 4;
    has_order3 = has_order3 || s.order == 3;
    r.lc_generators.push_back(s);
  }
  sort_lc_generators(r.lc_generators);
  r.in_set_T = !has_order3;
  r.classification = SymmetryClass::Continuous;
  return r;
}

/* Embed a component report at the given vertex positions of an n-qubit graph. */
void lift_report(SymmetryGroupReport& out, const SymmetryGroupReport& sub,
                 const std::vector<std::size_t>& pos) {
  const std::size_t n = out.graph.n;
  for (const LCSymmetry& s : sub.lc_generators) {
    LCSymmetry t;
    t.factors.assign(n, SingleQubitClifford{});
    t.pauli_correction = PauliString(n);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      t.factors[pos[i]] = s.factors[i];
      t.pauli_correction.z.set(pos[i], s.pauli_correction.z.get(i));
    }
    t.order = s.order;
    out.lc_generators.push_back(t);
  }
  for (const LocalSymmetry& s : sub.root_generators) {
    LocalSymmetry t;
    t.factors.assign(n, identity_factor());
    for (std::size_t i = 0; i < pos.size(); ++i) t.factors[pos[i]] = s.factors[i];
    out.root_generators.push_back(t);
  }
  for (ContinuousGenerator c : sub.continuous) {
    c.a = pos[c.a];
    c.b = pos[c.b];
    c.n = n;
    out.continuous.push_back(c);
  }
}

}  // namespace

std::string to_string(ContinuousKind k) {
  switch (k) {
    case ContinuousKind::LeafParent: return "leaf-parent";
    case ContinuousKind::Twins: return "twins";
    case ContinuousKind::ConnectedTwins: return "connected-twins";
    case ContinuousKind::IsolatedVertex: return "isolated";
  }
  return "?";
}

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::StabilizerOnly: return "stabilizer-only";
    case SymmetryClass::LCOnly: return "LC-only";
    case SymmetryClass::FiniteDiscrete: return "finite-discrete";
    case SymmetryClass::Continuous: return "continuous";
  }
  return "?";
}

Pauli ContinuousGenerator::axis_a() const {
  return kind == ContinuousKind::ConnectedTwins ? Pauli::Y : Pauli::X;
}

Pauli ContinuousGenerator::axis_b() const {
  switch (kind) {
    case ContinuousKind::LeafParent: return Pauli::Z;
    case ContinuousKind::Twins: return Pauli::X;
    case ContinuousKind::ConnectedTwins: return Pauli::Y;
    case ContinuousKind::IsolatedVertex: return Pauli::I;
  }
  return Pauli::I;
}

LocalSymmetry ContinuousGenerator::family() const {
  LocalSymmetry s;
  s.factors.assign(n, identity_factor());
  s.factors[a] = pauli_exp_factor(Pauli::I, axis_a(), FactorAngle::make_free(+1));
  if (kind != ContinuousKind::IsolatedVertex)
    s.factors[b] = pauli_exp_factor(Pauli::I, axis_b(), FactorAngle::make_free(-1));
  return s;
}

std::vector<Eigen::Matrix2cd> ContinuousGenerator::realize(std::complex<double> alpha) const {
  std::vector<Eigen::Matrix2cd> fac(n, Eigen::Matrix2cd::Identity());
  fac[a] = exp_pauli(axis_a(), alpha);
  if (kind != ContinuousKind::IsolatedVertex) fac[b] = exp_pauli(axis_b(), -alpha);
  return fac;
}

std::string ContinuousGenerator::to_string() const {
  std::string s = stabsym::to_string(kind) + "(" + std::to_string(a);
  if (kind != ContinuousKind::IsolatedVertex) s += "," + std::to_string(b);
  s += "): " + family().to_string();
  return s;
}

std::vector<ContinuousGenerator> leaf_symmetry_generators(const Graph& g) {
  std::vector<ContinuousGenerator> out;
  for (const LeafStructure& ls : find_leaf_structures(g)) {
    ContinuousKind k = ContinuousKind::LeafParent;
    if (ls.kind == LeafKind::Twins) k = ContinuousKind::Twins;
    if (ls.kind == LeafKind::ConnectedTwins) k = ContinuousKind::ConnectedTwins;
    out.push_back(ContinuousGenerator{k, ls.a, ls.b, g.n});
  }
  sort_continuous(out);
  return out;
}

std::vector<std::optional<Pauli>> determine_axes(const Graph& g,
                                                 const std::vector<LCSymmetry>& lc4,
                                                 const LCSolveOptions& opts) {
  const std::size_t n = g.n;
  std::vector<std::optional<Pauli>> axes(n);
  for (const LCSymmetry& sym : lc4) {
    std::vector<Pauli> sig = sigma_letters(sym);
    for (std::size_t j = 0; j < n; ++j) {
      if (sig[j] == Pauli::I) continue;
      if (axes[j] && *axes[j] != sig[j])
        throw std::logic_error("determine_axes: conflicting rotation axes");
      axes[j] = sig[j];
    }
  }
  if (lc4.empty()) return axes;

  /* Reduce: bring a determined qubit's axis to Z by local complementation,
   * project it out (|0> branch = deleted vertex), re-solve on the rest, and
   * pull new axes back through the per-qubit frame. */
  Graph h = g;
  std::vector<std::size_t> alive(n);
  std::iota(alive.begin(), alive.end(), std::size_t{0});
  std::vector<SingleQubitClifford> frame(n);

  auto apply_lc = [&](std::size_t idx) {
    BitVector nb = h.neighbors(idx);
    frame[alive[idx]] = compose(kLcVertex, frame[alive[idx]]);
    for (std::size_t i = 0; i < h.n; ++i)
      if (nb.get(i)) frame[alive[i]] = compose(kLcNeighbor, frame[alive[i]]);
    h = local_complement(h, idx);
  };

  for (std::size_t round = 0; round < n; ++round) {
    if (std::all_of(axes.begin(), axes.end(), [](const auto& a) { return a.has_value(); })) break;
    std::size_t pick = h.n;
    for (std::size_t i = 0; i < h.n; ++i)
      if (axes[alive[i]]) {
        pick = i;
        break;
      }
    if (pick == h.n) break;

    Pauli cur = frame[alive[pick]].image(*axes[alive[pick]]).first;
    if (cur == Pauli::X) {
      BitVector nb = h.neighbors(pick);
      std::size_t u = h.n;
      for (std::size_t i = 0; i < h.n && u == h.n; ++i)
        if (nb.get(i)) u = i;
      if (u < h.n) {
        apply_lc(u);
        cur = frame[alive[pick]].image(*axes[alive[pick]]).first;
      }
      /* An isolated X-axis qubit decouples; delete it directly. */
    }
    if (cur == Pauli::Y) apply_lc(pick);

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < h.n; ++i)
      if (i != pick) keep.push_back(i);
    h = induced_subgraph(h, keep);
    std::vector<std::size_t> next_alive;
    for (std::size_t i : keep) next_alive.push_back(alive[i]);
    alive = std::move(next_alive);
    if (h.n == 0) break;

    std::vector<std::set<Pauli>> suggest(n);
    for (const LCSymmetry& sym : solve_order4(h, opts)) {
      std::vector<Pauli> sig = sigma_letters(sym);
      for (std::size_t i = 0; i < h.n; ++i) {
        if (sig[i] == Pauli::I) continue;
        std::size_t orig = alive[i];
        suggest[orig].insert(inverse(frame[orig]).image(sig[i]).first);
      }
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!axes[j] && suggest[j].size() == 1) axes[j] = *suggest[j].begin();
  }
  return axes;
}

std::vector<LocalSymmetry> root_search(const Graph& g, const std::vector<LCSymmetry>& lc4,
                                       const RootSearchOptions& opts) {
  if (lc4.empty()) throw std::invalid_argument("root_search: no order-4 symmetry supplied");
  if (!solve_order3(g).empty())
    throw std::invalid_argument("root_search: order-3 symmetry present");
  const std::size_t n = g.n;

  std::vector<BitVector> basis;
  for (const LeafStructure& ls : find_leaf_structures(g)) basis.push_back(leaf_c_vector(ls, n));
  std::size_t base_rank = 0;
  if (!basis.empty()) {
    BitMatrix bm(basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i) bm.set_row(i, basis[i]);
    base_rank = rank(bm);
  }
  auto in_leaf_span = [&](const BitVector& c) {
    if (basis.empty()) return !c.any();
    BitMatrix m(basis.size() + 1, n);
    for (std::size_t i = 0; i < basis.size(); ++i) m.set_row(i, basis[i]);
    m.set_row(basis.size(), c);
    return rank(m) == base_rank;
  };

  struct Pattern {
    BitVector c;
    std::vector<std::size_t> supp;
  };
  std::vector<Pattern> pats;
  std::set<BitVector> seen;
  for (const LCSymmetry& sym : lc4) {
    LCBinaryOp op = sym.binary_op();
    if (!seen.insert(op.c).second) continue;
    Pattern p{op.c, {}};
    for (std::size_t j = 0; j < n; ++j)
      if (op.c.get(j)) p.supp.push_back(j);
    pats.push_back(std::move(p));
  }
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < pats.size(); ++i)
    if (!in_leaf_span(pats[i].c)) targets.push_back(i);
  if (targets.empty()) return {};

  std::vector<std::optional<Pauli>> axes = determine_axes(g, lc4, opts.lc);
  StabilizerGroup group(g.stabilizer_generators());

  /* Largest admissible k in exp(i m pi/2^k sigma) at qubit j. */
  auto level_bound = [&](std::size_t j, Pauli axis) -> int {
    if (axis == Pauli::X) {
      std::vector<std::size_t> nbr = g.neighbor_list(j);
      if (nbr.empty()) return 2;
      std::size_t best = g.n;
      for (std::size_t l : nbr) best = std::min(best, g.degree(l));
      return static_cast<int>(best) + 2;
    }
    return static_cast<int>(g.degree(j)) + 2;
  };

  struct Candidate {
    std::vector<std::size_t> supp;
    std::vector<Pauli> ax;
    std::vector<DyadicAngle> ang;
  };

  /* Exact check: expand the product over the support, reduce each Pauli through
   * the stabilizer group to i^phi Z^z, and demand a single surviving Z^z mass
   * (the Z^z |G> are orthonormal).  The reduction is angle-independent, so it
   * is tabulated once per support: mask -> (Z-class index, i^phi). */
  struct SupportTable {
    std::vector<BitVector> zclasses;
    std::vector<std::uint32_t> zindex;               /* per mask */
    std::vector<std::complex<double>> phase;         /* per mask */
  };
  std::map<std::vector<std::size_t>, SupportTable> tables;
  auto get_table = [&](const std::vector<std::size_t>& supp,
                       const std::vector<Pauli>& ax) -> const SupportTable& {
    auto it = tables.find(supp);
    if (it != tables.end()) return it->second;
    static const std::complex<double> kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    SupportTable tab;
    const std::size_t m = supp.size();
    std::map<std::vector<std::uint64_t>, std::uint32_t> index;
    tab.zindex.resize(std::size_t{1} << m);
    tab.phase.resize(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      PauliString p(n);
      for (std::size_t t = 0; t < m; ++t)
        if (mask >> t & 1) p.set_letter(supp[t], ax[t]);
      PauliString r = multiply(p, group.product(p.x));
      auto [pos, fresh] = index.emplace(r.z.words(), static_cast<std::uint32_t>(tab.zclasses.size()));
      if (fresh) tab.zclasses.push_back(r.z);
      tab.zindex[mask] = pos->second;
      tab.phase[mask] = kPhase[r.phase_exp & 3];
    }
    return tables.emplace(supp, std::move(tab)).first->second;
  };

  auto verify_exact = [&](const Candidate& cand) -> std::optional<BitVector> {
    const std::size_t m = cand.supp.size();
    if (m > opts.max_support) return std::nullopt;
    const SupportTable& tab = get_table(cand.supp, cand.ax);
    std::vector<std::complex<double>> factor(m);
    std::vector<double> cosv(m);
    for (std::size_t t = 0; t < m; ++t) {
      double a = cand.ang[t].value();
      cosv[t] = std::cos(a);
      factor[t] = std::complex<double>(0.0, std::sin(a));
    }
    std::vector<std::complex<double>> acc(tab.zclasses.size(), {0.0, 0.0});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::complex<double> coeff(1.0, 0.0);
      for (std::size_t t = 0; t < m; ++t) coeff *= (mask >> t & 1) ? factor[t] : cosv[t];
      acc[tab.zindex[mask]] += coeff * tab.phase[mask];
    }
    std::size_t best = acc.size();
    double best_mag = -1.0;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (std::abs(acc[i]) > best_mag) {
        best_mag = std::abs(acc[i]);
        best = i;
      }
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (i != best && std::abs(acc[i]) > opts.tol) return std::nullopt;
    if (best == acc.size() || best_mag < 0.5) return std::nullopt;
    return tab.zclasses[best];
  };

  auto confirm = [&](const Candidate& cand, const BitVector& zk) -> bool {
    if (n > opts.statevector_cap) return true;
    std::vector<Eigen::Matrix2cd> fac(n, Eigen::Matrix2cd::Identity());
    for (std::size_t t = 0; t < cand.supp.size(); ++t)
      fac[cand.supp[t]] = exp_pauli(cand.ax[t], cand.ang[t].value());
    for (std::size_t j = 0; j < n; ++j) {
      if (zk.get(j)) {
        Eigen::Matrix2cd zf = pauli_matrix_2x2(Pauli::Z) * fac[j];
        fac[j] = zf;
      }
    }
    return is_symmetry(g, fac, opts.tol, opts.statevector_cap).ok;
  };

  auto to_symmetry = [&](const Candidate& cand, const BitVector& zk) -> LocalSymmetry {
    LocalSymmetry s;
    s.factors.assign(n, identity_factor());
    std::vector<bool> in_supp(n, false);
    for (std::size_t t = 0; t < cand.supp.size(); ++t) {
      std::size_t j = cand.supp[t];
      in_supp[j] = true;
      s.factors[j] = pauli_exp_factor(zk.get(j) ? Pauli::Z : Pauli::I, cand.ax[t],
                                      FactorAngle::make_dyadic(cand.ang[t]));
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!in_supp[j] && zk.get(j)) s.factors[j] = pauli_factor(Pauli::Z);
    return s;
  };

  using AngleKey = std::pair<std::vector<std::size_t>, std::vector<DyadicAngle>>;
  std::set<AngleKey> seeded;
  std::vector<std::pair<Candidate, BitVector>> frontier;

  auto push_candidate = [&](Candidate cand) {
    if (!seeded.insert({cand.supp, cand.ang}).second) return;
    std::optional<BitVector> zk = verify_exact(cand);
    if (zk && confirm(cand, *zk)) frontier.emplace_back(std::move(cand), *zk);
  };

  /* Seed level 3 on each out-of-span pattern: variable odd multiples of pi/8
   * on the pattern support (first qubit fixed to {1,3}: V and V^dag pair up),
   * optionally overlaid with the fixed pi/4 block of another pattern. */
  for (std::size_t ti : targets) {
    const Pattern& pat = pats[ti];
    std::set<std::vector<std::size_t>> overlays;
    overlays.insert(std::vector<std::size_t>{});
    for (std::size_t qi = 0; qi < pats.size(); ++qi) {
      if (qi == ti) continue;
      std::vector<std::size_t> extra;
      for (std::size_t v : pats[qi].supp)
        if (!pat.c.get(v)) extra.push_back(v);
      if (!extra.empty()) overlays.insert(extra);
    }
    const std::size_t veg = pat.supp.size();
    if (veg == 0 || veg > 24) continue;
    std::uint64_t total = std::uint64_t{2} << (veg == 1 ? 0 : 2 * (veg - 1));
    if (total > opts.max_candidates) continue;
    for (const std::vector<std::size_t>& extra : overlays) {
      Candidate base;
      base.supp = pat.supp;
      base.supp.insert(base.supp.end(), extra.begin(), extra.end());
      std::sort(base.supp.begin(), base.supp.end());
      bool have_axes = true;
      for (std::size_t v : base.supp) have_axes = have_axes && axes[v].has_value();
      if (!have_axes) continue;
      base.ax.reserve(base.supp.size());
      for (std::size_t v : base.supp) base.ax.push_back(*axes[v]);
      for (std::uint64_t sel = 0; sel < total; ++sel) {
        Candidate cand = base;
        cand.ang.resize(base.supp.size());
        std::uint64_t rem = sel;
        bool first = true;
        for (std::size_t t = 0; t < base.supp.size(); ++t) {
          if (!pat.c.get(base.supp[t])) {
            cand.ang[t] = DyadicAngle(1, 2);
            continue;
          }
          long long mm;
          if (first) {
            mm = (rem & 1) ? 3 : 1;
            rem >>= 1;
            first = false;
          } else {
            mm = 2 * static_cast<long long>(rem & 3) + 1;
            rem >>= 2;
          }
          cand.ang[t] = DyadicAngle(mm, 3);
        }
        push_candidate(std::move(cand));
      }
    }
  }

  std::set<LocalSymmetry> emitted;
  std::vector<LocalSymmetry> out;
  for (std::size_t round = 0; round <= n + 2 && !frontier.empty(); ++round) {
    for (const auto& [cand, zk] : frontier) {
      LocalSymmetry s = to_symmetry(cand, zk);
      if (emitted.insert(s).second) out.push_back(std::move(s));
    }
    std::vector<std::pair<Candidate, BitVector>> parents = std::move(frontier);
    frontier.clear();
    std::uint64_t budget = opts.max_candidates;
    for (const auto& [cand, zk] : parents) {
      bool can_deepen = true;
      for (std::size_t t = 0; t < cand.supp.size(); ++t)
        if (cand.ang[t].k + 1 > level_bound(cand.supp[t], cand.ax[t])) {
          can_deepen = false;
          break;
        }
      if (!can_deepen) continue;
      const std::size_t m = cand.supp.size();
      if ((std::uint64_t{1} << m) > budget) break;
      budget -= std::uint64_t{1} << m;
      /* Children: each angle halves, with an optional extra pi/2 (2b = a mod pi). */
      for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << m); ++sel) {
        Candidate ch = cand;
        for (std::size_t t = 0; t < m; ++t) {
          long long mm = cand.ang[t].m;
          int kk = cand.ang[t].k;
          if (sel >> t & 1) mm += 1ll << kk;
          ch.ang[t] = DyadicAngle(mm, kk + 1);
        }
        push_candidate(std::move(ch));
      }
    }
  }
  sort_roots(out);
  return out;
}

SymmetryGroupReport full_symmetry_group(const Graph& g, const RootSearchOptions& opts) {
  SymmetryGroupReport r;
  r.graph = g;
  r.stabilizer_generators = g.stabilizer_generators();
  if (g.n == 0) return r;

  std::vector<std::vector<std::size_t>> comps = connected_components(g);
  if (comps.size() > 1) {
    for (const std::vector<std::size_t>& comp : comps) {
      SymmetryGroupReport sub = full_symmetry_group(induced_subgraph(g, comp), opts);
      lift_report(r, sub, comp);
      r.classification = class_rank(sub.classification) > class_rank(r.classification)
                             ? sub.classification
                             : r.classification;
      r.in_set_T = r.in_set_T && sub.in_set_T;
      r.roots_symbolically_derived = r.roots_symbolically_derived || sub.roots_symbolically_derived;
    }
    sort_lc_generators(r.lc_generators);
    sort_roots(r.root_generators);
    sort_continuous(r.continuous);
    return r;
  }

  if (g.n <= 2) return small_graph_report(g);

  LCGroup lc = lc_symmetry_group(g, opts.lc);
  std::vector<LCSymmetry> lc3;
  for (const auto& [d, sym] : lc.order3) lc3.push_back(sym);
  r.lc_generators = lc3;
  r.lc_generators.insert(r.lc_generators.end(), lc.order4.begin(), lc.order4.end());
  sort_lc_generators(r.lc_generators);
  r.in_set_T = lc3.empty();

  if (!lc3.empty()) {
    /* An order-3 factor forces the whole group to be local Clifford. */
    r.classification = SymmetryClass::LCOnly;
    return r;
  }

  r.continuous = leaf_symmetry_generators(g);
  if (lc.order4.empty()) {
    r.classification = r.continuous.empty() ? SymmetryClass::StabilizerOnly
                                            : SymmetryClass::Continuous;
    return r;
  }

  std::vector<BitVector> basis;
  for (const LeafStructure& ls : find_leaf_structures(g)) basis.push_back(leaf_c_vector(ls, g.n));
  bool all_in_span = true;
  if (basis.empty()) {
    all_in_span = false;
  } else {
    BitMatrix bm(basis.size(), g.n);
    for (std::size_t i = 0; i < basis.size(); ++i) bm.set_row(i, basis[i]);
    std::size_t base_rank = rank(bm);
    for (const LCSymmetry& sym : lc.order4) {
      BitMatrix m(basis.size() + 1, g.n);
      for (std::size_t i = 0; i < basis.size(); ++i) m.set_row(i, basis[i]);
      m.set_row(basis.size(), sym.binary_op().c);
      if (rank(m) != base_rank) {
        all_in_span = false;
        break;
      }
    }
  }

  if (!all_in_span) {
    r.root_generators = root_search(g, lc.order4, opts);
    r.roots_symbolically_derived = g.n > opts.statevector_cap && !r.root_generators.empty();
  }
  r.classification =
      r.continuous.empty() ? SymmetryClass::FiniteDiscrete : SymmetryClass::Continuous;
  return r;
}

GLExtension gl_extension(const SymmetryGroupReport& report) {
  GLExtension e;
  e.enlarged = !report.continuous.empty();
  e.complex_generators = report.continuous;
  return e;
}

}  // namespace stabsym
