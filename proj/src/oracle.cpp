#include "stabsym/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace stabsym {

namespace {

using Mat2 = Eigen::Matrix2cd;

BitMatrix diag_matrix(const BitVector& d) {
  BitMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d.get(i));
  return m;
}

/* Theorem-4 block condition for theta' = theta with per-qubit classes. */
bool lc_condition_holds(const BitMatrix& theta, const std::vector<BitMatrix>& cls,
                        const std::vector<int>& pick) {
  std::size_t n = theta.rows();
  BitVector a(n), b(n), c(n), d(n);
  for (std::size_t j = 0; j < n; ++j) {
    const BitMatrix& m = cls[pick[j]];
    a.set(j, m.get(0, 0));
    b.set(j, m.get(0, 1));
    c.set(j, m.get(1, 0));
    d.set(j, m.get(1, 1));
  }
  BitMatrix lhs = mat_mul(mat_mul(theta, diag_matrix(c)), theta);
  lhs = mat_add(lhs, mat_mul(diag_matrix(a), theta));
  lhs = mat_add(lhs, mat_mul(theta, diag_matrix(d)));
  lhs = mat_add(lhs, diag_matrix(b));
  return lhs.is_zero();
}

}  // namespace

StateVector build_graph_state(const Graph& g, std::size_t cap) {
  if (g.n > cap) throw std::invalid_argument("build_graph_state: qubit cap exceeded");
  StateVector psi;
  psi.n = g.n;
  std::size_t dim = std::size_t{1} << g.n;
  psi.amplitudes = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(double(dim)));
  for (auto [i, j] : g.edge_list()) {
    std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
    for (std::size_t b = 0; b < dim; ++b)
      if ((b & mask) == mask) psi.amplitudes[b] = -psi.amplitudes[b];
  }
  return psi;
}

StateVector apply_one(const Eigen::Matrix2cd& f, std::size_t qubit, const StateVector& psi) {
  if (qubit >= psi.n) throw std::invalid_argument("apply_one: qubit out of range");
  StateVector out = psi;
  std::size_t stride = std::size_t{1} << qubit;
  std::size_t dim = std::size_t{1} << psi.n;
  for (std::size_t base = 0; base < dim; base += 2 * stride)
    for (std::size_t off = 0; off < stride; ++off) {
      std::size_t i0 = base + off, i1 = i0 + stride;
      std::complex<double> a0 = psi.amplitudes[i0], a1 = psi.amplitudes[i1];
      out.amplitudes[i0] = f(0, 0) * a0 + f(0, 1) * a1;
      out.amplitudes[i1] = f(1, 0) * a0 + f(1, 1) * a1;
    }
  return out;
}

StateVector apply_local(const std::vector<Eigen::Matrix2cd>& factors, const StateVector& psi) {
  if (factors.size() != psi.n) throw std::invalid_argument("apply_local: factor count mismatch");
  StateVector out = psi;
  for (std::size_t j = 0; j < psi.n; ++j) {
    std::size_t stride = std::size_t{1} << j;
    std::size_t dim = std::size_t{1} << psi.n;
    const Mat2& f = factors[j];
    for (std::size_t base = 0; base < dim; base += 2 * stride)
      for (std::size_t off = 0; off < stride; ++off) {
        std::size_t i0 = base + off, i1 = i0 + stride;
        std::complex<double> a0 = out.amplitudes[i0], a1 = out.amplitudes[i1];
        out.amplitudes[i0] = f(0, 0) * a0 + f(0, 1) * a1;
        out.amplitudes[i1] = f(1, 0) * a0 + f(1, 1) * a1;
      }
  }
  return out;
}

StateVector apply_pauli(const PauliString& p, const StateVector& psi) {
  if (p.n != psi.n) throw std::invalid_argument("apply_pauli: size mismatch");
  std::vector<Mat2> factors;
  factors.reserve(p.n);
  for (std::size_t j = 0; j < p.n; ++j) factors.push_back(pauli_matrix_2x2(p.letter(j)));
  StateVector out = apply_local(factors, psi);
  std::complex<double> ph = std::pow(std::complex<double>(0, 1), int(p.phase_exp));
  out.amplitudes *= ph;
  return out;
}

SymmetryCheck check_proportional(const StateVector& ref, const StateVector& out, double tol) {
  std::complex<double> overlap = ref.amplitudes.dot(out.amplitudes);
  double scale = ref.norm() * out.norm();
  SymmetryCheck r;
  if (scale < 1e-300) return r;
  r.ok = std::abs(overlap) >= (1.0 - tol) * scale;
  if (std::abs(overlap) > 0) r.phase = overlap / std::abs(overlap);
  return r;
}

SymmetryCheck is_symmetry(const Graph& g, const std::vector<Eigen::Matrix2cd>& factors,
                          double tol, std::size_t cap) {
  StateVector base = build_graph_state(g, cap);
  return check_proportional(base, apply_local(factors, base), tol);
}

CliffordTuple pauli_action_tuple(const PauliString& p) {
  CliffordTuple t;
  t.reserve(p.n);
  for (std::size_t j = 0; j < p.n; ++j) t.push_back(conjugation_by(p.letter(j)));
  return t;
}

std::set<CliffordTuple> brute_force_lc_symmetries(const Graph& g) {
  if (g.n > 5) throw std::invalid_argument("brute_force_lc_symmetries: n > 5");
  std::size_t n = g.n;
  const BitMatrix& theta = g.adj;
  StateVector base = build_graph_state(g);

  std::vector<BitMatrix> cls;
  std::vector<Mat2> rep_u;
  std::vector<SingleQubitClifford> rep_c;
  for (int idx = 0; idx < 6; ++idx) {
    SingleQubitClifford c = clifford_from_class_and_pauli(idx, Pauli::I);
    cls.push_back(c.symplectic_class());
    rep_c.push_back(c);
    rep_u.push_back(table1_inverse(cls.back()).unitary);
  }
  Mat2 zmat = pauli_matrix_2x2(Pauli::Z);

  std::set<CliffordTuple> found;
  std::vector<int> pick(n, 0);
  while (true) {
    if (lc_condition_holds(theta, cls, pick)) {
      /* One Z-correction always exists: Pauli corrections form a coset of the
       * stabilizer contents, whose x-parts range over all of GF(2)^n. */
      CliffordTuple t0;
      bool ok = false;
      for (std::size_t k = 0; k < (std::size_t{1} << n) && !ok; ++k) {
        std::vector<Mat2> factors;
        for (std::size_t j = 0; j < n; ++j) {
          Mat2 f = rep_u[pick[j]];
          if ((k >> j) & 1) f = zmat * f;
          factors.push_back(f);
        }
        if (check_proportional(base, apply_local(factors, base)).ok) {
          ok = true;
          for (std::size_t j = 0; j < n; ++j) {
            SingleQubitClifford c = rep_c[pick[j]];
            if ((k >> j) & 1) c = compose(conjugation_by(Pauli::Z), c);
            t0.push_back(c);
          }
        }
      }
      if (!ok) throw std::logic_error("binary condition held but no Z-correction verified");
      /* All other Pauli corrections differ by a stabilizer element's content. */
      for (std::size_t e = 0; e < (std::size_t{1} << n); ++e) {
        BitVector ev(n);
        for (std::size_t j = 0; j < n; ++j) ev.set(j, (e >> j) & 1);
        BitVector zpart = theta.mul(ev);
        CliffordTuple t;
        for (std::size_t j = 0; j < n; ++j)
          t.push_back(compose(t0[j], conjugation_by(pauli_from_bits(ev.get(j), zpart.get(j)))));
        found.insert(std::move(t));
      }
    }
    std::size_t j = 0;
    while (j < n && ++pick[j] == 6) pick[j++] = 0;
    if (j == n) break;
  }
  return found;
}

std::set<LocalSymmetry> brute_force_dyadic_symmetries(const Graph& g, int k_max) {
  if (g.n > 4) throw std::invalid_argument("brute_force_dyadic_symmetries: n > 4");
  if (k_max < 0 || k_max > 3) throw std::invalid_argument("brute_force_dyadic_symmetries: k_max");
  std::size_t n = g.n;

  std::vector<LocalFactor> cands;
  for (int p = 0; p < 4; ++p) cands.push_back(pauli_factor(static_cast<Pauli>(p)));
  for (int s1 = 0; s1 < 4; ++s1)
    for (int s2 = 1; s2 < 4; ++s2)
      for (int k = 2; k <= k_max; ++k)
        for (long long m = 1; m < (1LL << (k - 1)); m += 2)
          cands.push_back(pauli_exp_factor(static_cast<Pauli>(s1), static_cast<Pauli>(s2),
                                           FactorAngle::make_dyadic(DyadicAngle(m, k))));
  std::vector<Mat2> cand_u;
  cand_u.reserve(cands.size());
  for (const auto& f : cands) cand_u.push_back(f.realize());

  StateVector base = build_graph_state(g);
  std::set<LocalSymmetry> found;
  std::vector<const LocalFactor*> picks(n, nullptr);

  /* Depth-first over qubits, reusing partially applied states. */
  auto rec = [&](auto&& self, std::size_t j, const StateVector& cur) -> void {
    if (j == n) {
      if (check_proportional(base, cur).ok) {
        LocalSymmetry s;
        for (const LocalFactor* f : picks) s.factors.push_back(*f);
        found.insert(std::move(s));
      }
      return;
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      picks[j] = &cands[i];
      self(self, j + 1, apply_one(cand_u[i], j, cur));
    }
  };
  rec(rec, 0, base);
  return found;
}

}  // namespace stabsym
