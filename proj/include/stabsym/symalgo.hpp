#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabsym/clifford.hpp"
#include "stabsym/graph.hpp"
#include "stabsym/lcsolver.hpp"
#include "stabsym/oracle.hpp"
#include "stabsym/pauli.hpp"

namespace stabsym {

enum class ContinuousKind { LeafParent, Twins, ConnectedTwins, IsolatedVertex };
std::string to_string(ContinuousKind k);

/* One-parameter symmetry family attached to a leaf structure: exp(i*a*axis_a) on
 * vertex a, exp(-i*a*axis_b) on vertex b.  Isolated vertices carry exp(i*a*X). */
struct ContinuousGenerator {
  ContinuousKind kind = ContinuousKind::LeafParent;
  std::size_t a = 0, b = 0;  /* leaf/first and parent/second; a == b when isolated */
  std::size_t n = 0;

  Pauli axis_a() const;
  Pauli axis_b() const;
  LocalSymmetry family() const;  /* symbolic free-parameter form */
  /* Factors at a sampled parameter; complex alpha realizes the GL family. */
  std::vector<Eigen::Matrix2cd> realize(std::complex<double> alpha) const;
  std::string to_string() const;
  bool operator==(const ContinuousGenerator&) const = default;
};

enum class SymmetryClass { StabilizerOnly, LCOnly, FiniteDiscrete, Continuous };
std::string to_string(SymmetryClass c);

struct SymmetryGroupReport {
  Graph graph;
  std::vector<PauliString> stabilizer_generators;
  std::vector<LCSymmetry> lc_generators;       /* order 3 before order 4, canonical order */
  std::vector<LocalSymmetry> root_generators;  /* non-LC dyadic-angle roots */
  std::vector<ContinuousGenerator> continuous;
  SymmetryClass classification = SymmetryClass::StabilizerOnly;
  bool in_set_T = true;
  bool roots_symbolically_derived = false;  /* emitted without statevector confirmation */

  bool operator==(const SymmetryGroupReport&) const = default;
};

/* One generator per leaf structure of the graph. */
std::vector<ContinuousGenerator> leaf_symmetry_generators(const Graph& g);

struct RootSearchOptions {
  std::size_t statevector_cap = kStateVectorCap;
  std::size_t max_support = 20;        /* exact verifier expands 2^support terms */
  std::size_t max_candidates = 65536;  /* per refinement level */
  double tol = 1e-9;
  LCSolveOptions lc{};
};

/* Rotation axis admitted at each qubit: fixed by order-4 patterns, extended by
 * the complement-to-Z / project-|0> / re-solve reduction; nullopt if none. */
std::vector<std::optional<Pauli>> determine_axes(const Graph& g,
                                                 const std::vector<LCSymmetry>& lc4,
                                                 const LCSolveOptions& opts = {});

/* 2^m-th roots of order-4 LC symmetries beyond the leaf/stabilizer span.
 * Pre: no order-3 symmetry exists and lc4 is nonempty. */
std::vector<LocalSymmetry> root_search(const Graph& g, const std::vector<LCSymmetry>& lc4,
                                       const RootSearchOptions& opts = {});

SymmetryGroupReport full_symmetry_group(const Graph& g, const RootSearchOptions& opts = {});

/* Invertible (GL) symmetries: the continuous families with complex parameter;
 * without continuous families the GL group adds nothing beyond the unitary one. */
struct GLExtension {
  bool enlarged = false;
  std::vector<ContinuousGenerator> complex_generators;
};

GLExtension gl_extension(const SymmetryGroupReport& report);

}  // namespace stabsym
