#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "mstv/graph.hpp"

namespace mstv {

// Integer weights drawn uniformly from [ceil(lo), floor(hi)].
struct WeightRange {
  double lo = 1.0;
  double hi = 100.0;
};

// Random connected simple graph: a random recursive spanning backbone plus
// uniformly chosen extra edges, edge ids shuffled. Throws
// Error{InvalidArgument} unless n - 1 <= m <= n(n-1)/2 and the range holds an
// integer >= 0.
Graph random_connected_graph(std::size_t n, std::size_t m, WeightRange weights,
                             std::mt19937_64& rng);

// Uniform spanning tree (Wilson's loop-erased random walks).
SpanningTree random_spanning_tree(const Graph& g, std::mt19937_64& rng);

// One random swap that strictly increases the weight: a non-tree edge in, a
// strictly lighter edge of its tree path out. nullopt if no such swap exists.
std::optional<SpanningTree> perturb_tree(const Graph& g, const SpanningTree& t,
                                         std::mt19937_64& rng);

}  // namespace mstv
