#pragma once

#include <complex>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "stabsym/clifford.hpp"
#include "stabsym/graph.hpp"
#include "stabsym/pauli.hpp"

namespace stabsym {

inline constexpr std::size_t kStateVectorCap = 14;

/* Dense 2^n-amplitude state; basis index bit j is qubit j. */
struct StateVector {
  std::size_t n = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

StateVector build_graph_state(const Graph& g, std::size_t cap = kStateVectorCap);

StateVector apply_one(const Eigen::Matrix2cd& f, std::size_t qubit, const StateVector& psi);
StateVector apply_local(const std::vector<Eigen::Matrix2cd>& factors, const StateVector& psi);
StateVector apply_pauli(const PauliString& p, const StateVector& psi);

struct SymmetryCheck {
  bool ok = false;
  std::complex<double> phase{};  /* <ref|out> normalized to unit modulus */
};

/* out ∝ ref: |<ref|out>| >= (1-tol) * |ref| * |out|. */
SymmetryCheck check_proportional(const StateVector& ref, const StateVector& out,
                                 double tol = 1e-9);
SymmetryCheck is_symmetry(const Graph& g, const std::vector<Eigen::Matrix2cd>& factors,
                          double tol = 1e-9, std::size_t cap = kStateVectorCap);

using CliffordTuple = std::vector<SingleQubitClifford>;

/* All local Clifford symmetries of |G> as exact per-qubit action tuples,
 * found by scanning all 6^n symplectic class assignments (n <= 5). */
std::set<CliffordTuple> brute_force_lc_symmetries(const Graph& g);

/* All symmetries with every factor of the form sigma1 * exp(i*m*pi/2^k * sigma2),
 * k <= k_max, found by exhaustive statevector filtering (n <= 4, k_max <= 3). */
std::set<LocalSymmetry> brute_force_dyadic_symmetries(const Graph& g, int k_max);

/* Conjugation action tuple of a stabilizer element's letter content. */
CliffordTuple pauli_action_tuple(const PauliString& p);

}  // namespace stabsym
