#pragma once

#include <string>

#include "planiv/graph.hpp"

namespace planiv {

enum class GraphFormat { Auto, EdgeList, Graph6, Json };

/// Edge-list text: one edge per line "u v" (decimal, 0-based), '#' starts a
/// comment, blank lines ignored. Vertex count is max id + 1.
Graph parse_edge_list(const std::string& text);

/// Standard graph6, one graph per line (the first non-empty line is used).
/// An optional ">>graph6<<" header is accepted.
Graph parse_graph6(const std::string& text);

/// {"n": int, "edges": [[u, v], ...]}
Graph parse_graph_json(const std::string& text);

/// Parses `source` in the given format; Auto sniffs the format from content.
Graph parse_graph(const std::string& source, GraphFormat format = GraphFormat::Auto);

std::string write_edge_list(const Graph& g);
std::string write_graph6(const Graph& g);
std::string write_graph_json(const Graph& g);
std::string write_graph(const Graph& g, GraphFormat format);

GraphFormat graph_format_from_name(const std::string& name);

}  // namespace planiv
