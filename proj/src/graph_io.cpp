#include "stabsym/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace stabsym {

namespace {

std::vector<std::string> nonempty_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  std::istringstream in{std::string(text)};
  while (std::getline(in, cur)) {
    while (!cur.empty() && (cur.back() == '\r' || cur.back() == ' ' || cur.back() == '\t'))
      cur.pop_back();
    std::size_t start = cur.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    lines.push_back(cur.substr(start));
  }
  return lines;
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
  auto lines = nonempty_lines(text);
  if (lines.empty()) throw ParseError("edgelist: empty input");
  std::size_t n = 0;
  {
    std::istringstream head(lines[0]);
    long long v = -1;
    if (!(head >> v) || v < 0) throw ParseError("edgelist: first line must be the vertex count");
    std::string rest;
    if (head >> rest) throw ParseError("edgelist: first line must contain only the vertex count");
    n = static_cast<std::size_t>(v);
  }
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ln(lines[i]);
    long long u = -1, v = -1;
    std::string rest;
    if (!(ln >> u >> v) || (ln >> rest))
      throw ParseError("edgelist: expected 'u v' on line " + std::to_string(i + 1));
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n || u == v)
      throw ParseError("edgelist: bad edge on line " + std::to_string(i + 1));
    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return g;
}

Graph parse_adjmatrix(std::string_view text) {
  auto lines = nonempty_lines(text);
  if (lines.empty()) throw ParseError("adjmatrix: empty input");
  std::size_t n = lines.size();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lines[i].size() != n)
      throw ParseError("adjmatrix: row " + std::to_string(i + 1) + " must have " +
                       std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      char c = lines[i][j];
      if (c != '0' && c != '1') throw ParseError("adjmatrix: entries must be '0' or '1'");
      if (c == '1') g.adj.set(i, j, true);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.adj.get(i, i)) throw ParseError("adjmatrix: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if (g.adj.get(i, j) != g.adj.get(j, i)) throw ParseError("adjmatrix: not symmetric");
  }
  return g;
}

Graph parse_graph6(std::string_view text) {
  auto lines = nonempty_lines(text);
  if (lines.empty()) throw ParseError("graph6: empty input");
  std::string_view s = lines[0];
  if (s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
  if (s.empty()) throw ParseError("graph6: empty code");
  int c0 = s[0] - 63;
  if (c0 < 0 || c0 > 62) throw ParseError("graph6: only n <= 62 supported");
  std::size_t n = static_cast<std::size_t>(c0);
  s.remove_prefix(1);
  std::size_t nbits = n * (n - 1) / 2;
  std::size_t nchars = (nbits + 5) / 6;
  if (s.size() < nchars) throw ParseError("graph6: truncated code");
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      int word = s[bit / 6] - 63;
      if (word < 0 || word > 63) throw ParseError("graph6: bad character");
      if ((word >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return parse_edgelist(text);
    case GraphFormat::AdjMatrix: return parse_adjmatrix(text);
    case GraphFormat::Graph6: return parse_graph6(text);
  }
  throw ParseError("unknown graph format");
}

Graph load_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (auto [u, v] : g.edge_list()) out << u << " " << v << "\n";
  return out.str();
}

std::string write_graph6(const Graph& g) {
  if (g.n > 62) throw std::invalid_argument("graph6: only n <= 62 supported");
  std::string s(1, static_cast<char>(g.n + 63));
  std::size_t nbits = g.n * (g.n - 1) / 2;
  std::string code((nbits + 5) / 6, static_cast<char>(63));
  std::size_t bit = 0;
  for (std::size_t j = 1; j < g.n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if (g.edge(i, j)) code[bit / 6] = static_cast<char>(code[bit / 6] + (1 << (5 - bit % 6)));
  return s + code;
}

}  // namespace stabsym
