#include "stabsym/lcsolver.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <thread>

namespace stabsym {

bool LCBinaryOp::determinant_condition() const {
  for (std::size_t j = 0; j < a.size(); ++j)
    if ((a.get(j) && d.get(j)) == (b.get(j) && c.get(j))) return false;
  return true;
}

CliffordTuple LCSymmetry::total_action() const {
  CliffordTuple t;
  t.reserve(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j)
    t.push_back(compose(conjugation_by(pauli_correction.letter(j)), factors[j]));
  return t;
}

std::vector<Eigen::Matrix2cd> LCSymmetry::realize() const {
  std::vector<Eigen::Matrix2cd> out;
  out.reserve(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) {
    Eigen::Matrix2cd m =
        pauli_matrix_2x2(pauli_correction.letter(j)) * clifford_unitary(factors[j]);
    out.push_back(m);
  }
  return out;
}

LocalSymmetry LCSymmetry::local_factors() const {
  LocalSymmetry s;
  for (const SingleQubitClifford& c : total_action()) s.factors.push_back(clifford_to_factor(c));
  return s;
}

LCBinaryOp LCSymmetry::binary_op() const {
  LCBinaryOp op(factors.size());
  for (std::size_t j = 0; j < factors.size(); ++j) {
    BitMatrix m = factors[j].symplectic_class();
    op.a.set(j, m.get(0, 0));
    op.b.set(j, m.get(0, 1));
    op.c.set(j, m.get(1, 0));
    op.d.set(j, m.get(1, 1));
  }
  return op;
}

int solver_thread_count(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("STABSYM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(std::min(v, long{64}));
  }
  return 1;
}

std::optional<PauliString> pauli_correction(const Graph& g, const CliffordTuple& candidate) {
  std::size_t n = g.n;
  if (candidate.size() != n) throw std::invalid_argument("pauli_correction: size mismatch");
  std::vector<PauliString> gens = g.stabilizer_generators();
  StabilizerGroup group(gens);
  /* Conjugation sends generator i to (-1)^{s_i} h_i; Z^k must flip exactly the
   * negative signs: <k, x(h_i)> = s_i for every i. */
  BitMatrix sys(n, n);
  BitVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    PauliString h = conjugate(candidate, gens[i]);
    auto w = group.member(h);
    if (!w || (w->lambda_exp & 1)) return std::nullopt;
    sys.set_row(i, h.x);
    rhs.set(i, w->lambda_exp == 2);
  }
  AffineSolutionSet sol = solve_affine(sys, rhs);
  if (!sol.solvable) return std::nullopt;
  PauliString k(n);
  k.z = sol.particular;
  return k;
}

std::vector<std::pair<BitVector, LCSymmetry>> solve_order3(const Graph& g) {
  std::size_t n = g.n;
  std::vector<std::pair<BitVector, LCSymmetry>> out;
  if (n == 0) return out;
  BitMatrix theta2 = mat_mul(g.adj, g.adj);
  /* Entry (i,j) of theta^2 + A*theta + theta*A + theta + 1 is linear in diag A:
   * theta_ij*(a_i + a_j) = theta2_ij + theta_ij + [i==j]. */
  BitMatrix sys(n * (n + 1) / 2, n);
  BitVector rhs(n * (n + 1) / 2);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++r) {
      if (g.adj.get(i, j)) {
        sys.set(r, i, true);
        sys.set(r, j, true);
      }
      rhs.set(r, theta2.get(i, j) ^ g.adj.get(i, j) ^ (i == j));
    }
  AffineSolutionSet sol = solve_affine(sys, rhs);
  if (!sol.solvable) return out;
  if (sol.dimension() > 20)
    throw std::runtime_error("solve_order3: solution space too large to enumerate");
  for (const BitVector& a : sol.enumerate()) {
    std::size_t d = a.popcount();
    if (d == 0 || d == n) continue;
    CliffordTuple reps;
    reps.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
      reps.push_back(clifford_from_class_and_pauli(a.get(j) ? 5 : 4, Pauli::I));
    std::optional<PauliString> k = pauli_correction(g, reps);
    if (!k) throw std::logic_error("solve_order3: binary solution admits no sign assignment");
    LCSymmetry sym;
    sym.order = 3;
    sym.pauli_correction = PauliString(n);
    sym.factors.reserve(n);
    /* Fold the sign fix into the factors so no correction remains. */
    for (std::size_t j = 0; j < n; ++j)
      sym.factors.push_back(compose(conjugation_by(k->letter(j)), reps[j]));
    out.emplace_back(a, std::move(sym));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

namespace {

/* Scan candidates c in [begin, end) for 0 = theta*C*theta + B*C*theta + theta*B*C + B
 * with B = diag(theta*c), C = diag(c).  State (T = theta*C*theta rows, b = theta*c)
 * is updated per flipped bit; natural-order increments flip 2 bits on average. */
std::vector<uint64_t> scan_order4_range(const std::vector<BitVector>& th, std::size_t n,
                                        uint64_t begin, uint64_t end) {
  std::vector<uint64_t> hits;
  const std::size_t W = BitVector::words_for(n);
  std::vector<BitVector> T(n, BitVector(n));
  BitVector b(n), c(n), u(n);
  auto flip = [&](unsigned k) {
    c.flip(k);
    b ^= th[k];
    for (std::size_t i = 0; i < n; ++i)
      if (th[k].get(i)) T[i] ^= th[k];
  };
  for (unsigned k = 0; k < n; ++k)
    if ((begin >> k) & 1) flip(k);
  for (uint64_t cur = begin; cur < end; ++cur) {
    if (cur != begin) {
      uint64_t changed = cur ^ (cur - 1);
      while (changed) {
        flip(static_cast<unsigned>(std::countr_zero(changed)));
        changed &= changed - 1;
      }
    }
    if (cur == 0) continue;
    for (std::size_t w = 0; w < W; ++w) u.words()[w] = b.words()[w] & c.words()[w];
    /* Row i of the condition: T_i + u_i*theta_i + (theta_i & u) + b_i*e_i. */
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const uint64_t* ti = T[i].words().data();
      const uint64_t* thi = th[i].words().data();
      const bool ui = u.get(i);
      for (std::size_t w = 0; w < W; ++w) {
        uint64_t v = ti[w] ^ (thi[w] & u.words()[w]);
        if (ui) v ^= thi[w];
        if (w == (i >> 6) && b.get(i)) v ^= uint64_t{1} << (i & 63);
        if (v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) hits.push_back(cur);
  }
  return hits;
}

}  // namespace

std::vector<LCSymmetry> solve_order4(const Graph& g, const LCSolveOptions& opts) {
  std::size_t n = g.n;
  if (n > opts.order4_max_n)
    throw std::invalid_argument("solve_order4: vertex count exceeds enumeration cap");
  std::vector<LCSymmetry> out;
  if (n == 0) return out;
  std::vector<BitVector> th;
  th.reserve(n);
  for (std::size_t i = 0; i < n; ++i) th.push_back(g.adj.row(i));

  const uint64_t total = uint64_t{1} << n;
  const int threads = solver_thread_count(opts.threads);
  std::vector<uint64_t> hits;
  if (threads <= 1 || total < 4096) {
    hits = scan_order4_range(th, n, 0, total);
  } else {
    std::vector<std::vector<uint64_t>> parts(threads);
    std::vector<std::thread> pool;
    const uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const uint64_t lo = std::min(total, chunk * t);
      const uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back([&parts, &th, n, t, lo, hi] {
        parts[t] = scan_order4_range(th, n, lo, hi);
      });
    }
    for (auto& p : pool) p.join();
    for (auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
  }

  /* sigma_j from (c_j, b_j): (1,0)->X, (1,1)->Y, (0,1)->Z, (0,0)->1. */
  constexpr int kClassOf[4] = {0, 3, 2, 1}; /* 1, X, Y, Z -> class index */
  for (uint64_t mask : hits) {
    BitVector c(n);
    for (std::size_t k = 0; k < n; ++k) c.set(k, (mask >> k) & 1);
    BitVector b = g.adj.mul(c);
    CliffordTuple reps;
    reps.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      Pauli sigma = pauli_from_bits(c.get(j), b.get(j));
      reps.push_back(clifford_from_class_and_pauli(kClassOf[static_cast<int>(sigma)], Pauli::I));
    }
    std::optional<PauliString> k = pauli_correction(g, reps);
    if (!k) throw std::logic_error("solve_order4: solution admits no correction");
    LCSymmetry sym;
    sym.order = 4;
    sym.factors = std::move(reps);
    sym.pauli_correction = std::move(*k);
    out.push_back(std::move(sym));
  }
  return out;
}

LCGroup lc_symmetry_group(const Graph& g, const LCSolveOptions& opts) {
  LCGroup r;
  r.order3 = solve_order3(g);
  r.order4 = solve_order4(g, opts);
  return r;
}

std::set<CliffordTuple> generate_lc_group(const Graph& g, const LCGroup& gens,
                                          std::size_t limit) {
  const std::size_t n = g.n;
  std::vector<CliffordTuple> gen_tuples;
  for (const PauliString& s : g.stabilizer_generators()) {
    CliffordTuple t;
    t.reserve(n);
    for (std::size_t j = 0; j < n; ++j) t.push_back(conjugation_by(s.letter(j)));
    gen_tuples.push_back(std::move(t));
  }
  for (const auto& [d, sym] : gens.order3) gen_tuples.push_back(sym.total_action());
  for (const LCSymmetry& sym : gens.order4) gen_tuples.push_back(sym.total_action());

  CliffordTuple id(n);
  std::set<CliffordTuple> seen{id};
  std::deque<CliffordTuple> work{id};
  while (!work.empty()) {
    CliffordTuple cur = std::move(work.front());
    work.pop_front();
    for (const CliffordTuple& t : gen_tuples) {
      CliffordTuple nxt(n);
      for (std::size_t j = 0; j < n; ++j) nxt[j] = compose(t[j], cur[j]);
      if (seen.insert(nxt).second) {
        if (seen.size() > limit) throw std::runtime_error("generate_lc_group: limit exceeded");
        work.push_back(std::move(nxt));
      }
    }
  }
  return seen;
}

}  // namespace stabsym
