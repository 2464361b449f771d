#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

#include "stabsym/gf2.hpp"
#include "stabsym/pauli.hpp"

namespace stabsym {

/* Simple undirected graph; adjacency is symmetric with zero diagonal. */
struct Graph {
  std::size_t n = 0;
  BitMatrix adj;

  Graph() = default;
  explicit Graph(std::size_t n_) : n(n_), adj(n_, n_) {}
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  bool edge(std::size_t i, std::size_t j) const { return adj.get(i, j); }
  void add_edge(std::size_t i, std::size_t j);
  void toggle_edge(std::size_t i, std::size_t j);
  BitVector neighbors(std::size_t j) const { return adj.row(j); }
  std::vector<std::size_t> neighbor_list(std::size_t j) const;
  std::size_t degree(std::size_t j) const;
  std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;
  bool operator==(const Graph&) const = default;

  std::vector<PauliString> stabilizer_generators() const { return canonical_generators(adj); }
};

/* Complement the subgraph induced on the neighborhood of v. */
Graph local_complement(const Graph& g, std::size_t v);

/*
 * Per-qubit factors of the local Clifford mapping |G> to |LC_v(G)>:
 * exp(-i pi/4 X) on v, exp(+i pi/4 Z) on each neighbor, identity elsewhere.
 */
std::vector<Eigen::Matrix2cd> lc_unitary(const Graph& g, std::size_t v);

enum class LeafKind { LeafParent, Twins, ConnectedTwins };

/*
 * Pairs supporting a one-parameter symmetry family: a leaf with its parent,
 * non-adjacent vertices with equal neighborhoods, or adjacent vertices whose
 * neighborhoods agree away from the pair.
 */
struct LeafStructure {
  LeafKind kind;
  std::size_t a, b;  /* leaf-parent: a = leaf; otherwise a < b */
  bool operator==(const LeafStructure&) const = default;
};

std::vector<LeafStructure> find_leaf_structures(const Graph& g);

std::vector<std::vector<std::size_t>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/* Induced subgraph on the given (sorted) vertex subset. */
Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices);

}  // namespace stabsym
