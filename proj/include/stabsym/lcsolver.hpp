#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "stabsym/clifford.hpp"
#include "stabsym/graph.hpp"
#include "stabsym/pauli.hpp"

namespace stabsym {

using CliffordTuple = std::vector<SingleQubitClifford>;

/* Diagonal blocks of a local symplectic map Q = ((A,B),(C,D)); entry j holds
 * the per-qubit 2x2 class, with the determinant condition a_j d_j + b_j c_j = 1. */
struct LCBinaryOp {
  BitVector a, b, c, d;

  explicit LCBinaryOp(std::size_t n) : a(n), b(n), c(n), d(n) {}
  bool determinant_condition() const;
};

/* A local Clifford symmetry Z^k * (x)_j factors[j], up to global phase. */
struct LCSymmetry {
  CliffordTuple factors;
  PauliString pauli_correction;  /* Z-type, phase 0 */
  int order = 4;                 /* 3 or 4 */

  bool operator==(const LCSymmetry&) const = default;

  CliffordTuple total_action() const;
  std::vector<Eigen::Matrix2cd> realize() const;
  LocalSymmetry local_factors() const;  /* per-qubit canonical factor forms */
  LCBinaryOp binary_op() const;         /* diagonal blocks of the symplectic action */
};

struct LCSolveOptions {
  std::size_t order4_max_n = 24;
  int threads = 0;  /* 0: honor STABSYM_THREADS, default 1 */
};

int solver_thread_count(int requested);

/* All order-3 solutions: diagonal A with 0 = theta^2 + A*theta + theta*A + theta + 1,
 * excluding d in {0, n}.  Each returned with its d-indicator (bits where a_j = 1,
 * the "XY"-class block); signs are folded in so no correction remains. */
std::vector<std::pair<BitVector, LCSymmetry>> solve_order3(const Graph& g);

/* All order-4 solutions: c != 0 with b = theta*c and
 * 0 = theta*C*theta + B*C*theta + theta*B*C + B; factor j is exp(i*pi/4*sigma_j)
 * with sigma_j read off (c_j, b_j) as (1,0)->X, (1,1)->Y, (0,1)->Z, (0,0)->1. */
std::vector<LCSymmetry> solve_order4(const Graph& g, const LCSolveOptions& opts = {});

/* The unique Z-type correction making Z^k * candidate a symmetry, if the
 * candidate's conjugation action preserves the stabilizer group up to signs. */
std::optional<PauliString> pauli_correction(const Graph& g, const CliffordTuple& candidate);

struct LCGroup {
  std::vector<std::pair<BitVector, LCSymmetry>> order3;
  std::vector<LCSymmetry> order4;
};

/* Generating set for all LC symmetries: S_G (implicit) plus the solver output. */
LCGroup lc_symmetry_group(const Graph& g, const LCSolveOptions& opts = {});

/* Closure of <S_G, generators> as exact action tuples; throws past the limit. */
std::set<CliffordTuple> generate_lc_group(const Graph& g, const LCGroup& gens,
                                          std::size_t limit = std::size_t{1} << 22);

}  // namespace stabsym
