#pragma once

#include <string>
#include <string_view>

#include "mstv/graph.hpp"

namespace mstv {

// Graph file: "n m" header, then m lines "u v w". Throws Error{ParseError} on
// malformed input plus whatever Graph::create rejects.
Graph load_graph(std::string_view text);

// Tree file: header "pairs" or "indices", then n-1 lines of "u v" or "i".
// A pair resolves to the (w, id)-least edge joining its endpoints.
SpanningTree load_tree(std::string_view text, const Graph& g);

// Canonical text forms; load_graph(serialize_graph(g)) reproduces g.
std::string serialize_graph(const Graph& g);
std::string serialize_tree_indices(const SpanningTree& t);
std::string serialize_tree_pairs(const Graph& g, const SpanningTree& t);

std::string format_weight(Weight w);

// Reads a whole file; throws Error{InvalidArgument} if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace mstv
