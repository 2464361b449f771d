#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stabsym/graph.hpp"

namespace stabsym {

enum class GraphFormat { EdgeList, AdjMatrix, Graph6 };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* First line n, then one "u v" pair per line (0-indexed). */
Graph parse_edgelist(std::string_view text);
/* n lines of n characters, each '0' or '1'. */
Graph parse_adjmatrix(std::string_view text);
/* Standard graph6 encoding, n <= 62. */
Graph parse_graph6(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);
Graph load_graph(const std::string& path, GraphFormat format);

std::string write_edgelist(const Graph& g);
std::string write_graph6(const Graph& g);

}  // namespace stabsym
