#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "stabsym/clifford.hpp"
#include "stabsym/graph.hpp"
#include "stabsym/pauli.hpp"
#include "stabsym/symalgo.hpp"

namespace stabsym {

/*
 * Local projectors (x)_{j in supp(S)} (1 + (-1)^{f(j)} S_j), one per odd-weight
 * f over the support of a stabilizer element S; each annihilates the state.
 */
struct ProjectorSet {
  PauliString source;
  std::vector<std::size_t> support;  /* ascending */
  std::vector<BitVector> odd_f;      /* bit i = f(support[i]); odd weight */

  std::size_t size() const { return odd_f.size(); }
  /* Per-qubit factors of projector k; identity off the support. */
  std::vector<Eigen::Matrix2cd> factors(std::size_t k) const;
};

/* Requires element in s exactly (phase included) with support size >= 2. */
ProjectorSet annihilating_projectors(const StabilizerGroup& s, const PauliString& element);

/*
 * Kraus set of a separable map sending |G><G| to h|G><G|h / ||h|G>||^2 with
 * h = H^{1/2}, H = (x)_{k in supp(S_(j))} (1 + a (S_(j))_k). Half the operators
 * carry annihilating projectors, half carry the neighbour-generator subgroup.
 */
struct KrausOperator {
  enum class Kind { Projector, Stabilizer };
  Kind kind = Kind::Projector;
  double coefficient = 0.0;               /* scalar in front of the local part */
  BitVector f;                            /* Projector: f over support positions */
  PauliString pauli;                      /* Stabilizer: the subgroup element */
  std::vector<Eigen::Matrix2cd> factors;  /* per-qubit local part (h * Q or h * P) */
};

struct KrausSet {
  Graph graph;
  std::size_t qubit = 0;
  double a = 0.0;
  std::vector<Eigen::Matrix2cd> target_h;  /* per-qubit h_k */
  std::vector<KrausOperator> operators;

  /* ||sum_k M_k^dag M_k - 1||_F, built densely; requires n <= cap. */
  double completeness_residual(std::size_t cap = 10) const;
};

KrausSet sep_transformation(const Graph& g, std::size_t j, double a);

/*
 * Necessary-condition test for SEP maps with invertible local Kraus operators
 * from |G> to h|G>: possible only if tr(H S) = 0 for every nonidentity
 * stabilizer element. Returns true when some trace is nonzero (obstructed).
 */
bool sep1_obstruction(const Graph& g, const std::vector<Eigen::Matrix2cd>& H,
                      double tol = 1e-10);

/*
 * One-logical-qubit stabilizer code {|0>_L = |G>, |1>_L = P|G>} on which the
 * local symmetry acts diagonally: gate|0>_L = e^{i alpha0}|0>_L and
 * gate|1>_L = sign * e^{-i alpha0}|1>_L.
 */
struct CodePair {
  Graph graph;
  PauliString pauli_p;  /* |1>_L = P|G> */
  LocalSymmetry gate;   /* the symmetry used (possibly a stabilizer multiple of u) */
  double alpha0 = 0.0;
  int sign = 1;
};

/*
 * Requires u a symmetry with realized phase e^{i alpha0}, alpha0 != m*pi, and
 * no order-3 Clifford factor. P anticommutes with the rotation axis on qubits
 * where the Pauli part is trivial or equals the axis (lexicographically first
 * choice), and is trivial elsewhere; when P lands in the stabilizer, u is
 * retried as S*u over stabilizer elements S in mask order.
 */
CodePair transversal_code(const Graph& g, const LocalSymmetry& u, double tol = 1e-9);

/*
 * Attach a new vertex to qubit j (requires the gate factor at j diagonal,
 * i.e. rotation axis Z); the gate extended by identity remains a symmetry
 * and yields a code on the larger graph.
 */
std::pair<Graph, CodePair> extend_code(const Graph& g, const LocalSymmetry& u, std::size_t j,
                                       double tol = 1e-9);

/*
 * Reachability of h|G> via finite-round LOCC: searches words of the report's
 * discrete generators (length <= word_bound) for a symmetry whose factors
 * commute with H_j everywhere except exactly one pivot qubit.
 */
struct LOCCNResult {
  bool reachable = false;
  std::size_t pivot = 0;
  std::vector<Eigen::Matrix2cd> witness;  /* empty when unreachable */
};

LOCCNResult loccn_reachable(const SymmetryGroupReport& report,
                            const std::vector<Eigen::Matrix2cd>& H,
                            std::size_t word_bound = 3, double tol = 1e-10);

}  // namespace stabsym
