#include "stabsym/graph.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace stabsym {

Graph Graph::from_edges(std::size_t n,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  if (i == j || i >= n || j >= n) throw std::invalid_argument("bad edge");
  adj.set(i, j, true);
  adj.set(j, i, true);
}

void Graph::toggle_edge(std::size_t i, std::size_t j) {
  if (i == j || i >= n || j >= n) throw std::invalid_argument("bad edge");
  adj.flip(i, j);
  adj.flip(j, i);
}

std::vector<std::size_t> Graph::neighbor_list(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (adj.get(j, k)) out.push_back(k);
  return out;
}

std::size_t Graph::degree(std::size_t j) const {
  std::size_t d = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (adj.get(j, k)) ++d;
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_list() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adj.get(i, j)) out.emplace_back(i, j);
  return out;
}

Graph local_complement(const Graph& g, std::size_t v) {
  if (v >= g.n) throw std::invalid_argument("vertex out of range");
  Graph out = g;
  auto nv = g.neighbor_list(v);
  for (std::size_t a = 0; a < nv.size(); ++a)
    for (std::size_t b = a + 1; b < nv.size(); ++b)
      out.toggle_edge(nv[a], nv[b]);
  return out;
}

std::vector<Eigen::Matrix2cd> lc_unitary(const Graph& g, std::size_t v) {
  if (v >= g.n) throw std::invalid_argument("vertex out of range");
  using namespace std::complex_literals;
  const double c = std::sqrt(0.5);
  Eigen::Matrix2cd xrot_neg, zrot_pos;
  /* exp(-i pi/4 X) and exp(+i pi/4 Z). */
  xrot_neg << c, -1i * c, -1i * c, c;
  zrot_pos << std::exp(1i * (M_PI / 4)), 0, 0, std::exp(-1i * (M_PI / 4));
  std::vector<Eigen::Matrix2cd> factors(g.n, Eigen::Matrix2cd::Identity());
  factors[v] = xrot_neg;
  for (std::size_t j : g.neighbor_list(v)) factors[j] = zrot_pos;
  return factors;
}

std::vector<LeafStructure> find_leaf_structures(const Graph& g) {
  std::vector<LeafStructure> out;
  for (std::size_t l = 0; l < g.n; ++l) {
    if (g.degree(l) == 1) out.push_back({LeafKind::LeafParent, l, g.neighbor_list(l)[0]});
  }
  for (std::size_t s = 0; s < g.n; ++s) {
    for (std::size_t t = s + 1; t < g.n; ++t) {
      BitVector ns = g.neighbors(s);
      BitVector nt = g.neighbors(t);
      if (!g.edge(s, t)) {
        if (ns == nt && ns.any()) out.push_back({LeafKind::Twins, s, t});
      } else {
        ns.flip(t);
        nt.flip(s);
        if (ns == nt) out.push_back({LeafKind::ConnectedTwins, s, t});
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(g.n, false);
  for (std::size_t start = 0; start < g.n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w : g.neighbor_list(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices) {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.edge(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

}  // namespace stabsym
