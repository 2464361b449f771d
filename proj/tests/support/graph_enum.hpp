#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "stabsym/graph.hpp"

namespace testsup {

/* Upper-triangle bit index of pair (i<j) among n vertices. */
inline std::size_t pair_bit(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  std::size_t idx = 0;
  for (std::size_t a = 0; a < i; ++a) idx += n - 1 - a;
  return idx + (j - i - 1);
}

inline uint64_t edge_mask(const stabsym::Graph& g) {
  uint64_t mask = 0;
  for (auto [i, j] : g.edge_list()) mask |= uint64_t{1} << pair_bit(i, j, g.n);
  return mask;
}

/* Minimum edge mask over all vertex relabelings: an isomorphism-class key. */
inline uint64_t canonical_mask(const stabsym::Graph& g) {
  std::size_t n = g.n;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t mask = 0;
    for (auto [i, j] : g.edge_list()) mask |= uint64_t{1} << pair_bit(perm[i], perm[j], n);
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline stabsym::Graph graph_from_mask(std::size_t n, uint64_t mask) {
  stabsym::Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((mask >> pair_bit(i, j, n)) & 1) g.add_edge(i, j);
  return g;
}

/* One representative per isomorphism class of connected graphs on n vertices,
 * in increasing canonical-mask order.  Practical for n <= 7.  Scanning masks in
 * increasing order makes the first unseen mask of each class its canonical
 * representative; the class orbit is then marked seen in one pass. */
inline std::vector<stabsym::Graph> connected_graphs(std::size_t n) {
  std::size_t bits = n * (n - 1) / 2;
  std::set<uint64_t> seen;
  std::vector<stabsym::Graph> out;
  std::vector<std::size_t> perm(n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
    if (seen.count(mask)) continue;
    stabsym::Graph g = graph_from_mask(n, mask);
    auto edges = g.edge_list();
    std::iota(perm.begin(), perm.end(), 0);
    do {
      uint64_t m = 0;
      for (auto [i, j] : edges) m |= uint64_t{1} << pair_bit(perm[i], perm[j], n);
      seen.insert(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace testsup
