#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "mstv/boruvka.hpp"
#include "mstv/graph.hpp"
#include <string>

namespace mstv::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<Graph::RawEdge> edges) {
  std::vector<Graph::RawEdge> raw(edges);
  return Graph::create(n, raw);
}

// Edge ids: 0 = (0,1) w1, 1 = (1,2) w2, 2 = (0,2) w3.
inline Graph triangle() { return make_graph(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}}); }

// Random recursive tree on n vertices, weights drawn from {1..alphabet}, plus
// `extra` random non-tree edges (possibly parallel).
inline Graph random_graph_with_tree(std::size_t n, std::size_t extra, int alphabet,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<int> weight(1, alphabet);
  std::vector<Graph::RawEdge> raw;
  for (VertexId v = 1; v < n; ++v) {
    const auto parent = std::uniform_int_distribution<VertexId>(0, v - 1)(rng);
    raw.push_back({parent, v, static_cast<double>(weight(rng))});
  }
  if (n >= 2) {
    std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
    while (extra > 0) {
      const VertexId a = vertex(rng), b = vertex(rng);
      if (a == b) continue;
      raw.push_back({a, b, static_cast<double>(weight(rng))});
      --extra;
    }
  }
  std::shuffle(raw.begin(), raw.end(), rng);
  return Graph::create(n, raw);
}

// Calls f on every spanning tree (as edge-id lists) of a small graph.
inline void for_each_spanning_tree(const Graph& g,
                                   const std::function<void(const std::vector<EdgeId>&)>& f) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  std::vector<EdgeId> chosen;
  std::function<void(EdgeId)> rec = [&](EdgeId next) {
    if (chosen.size() + 1 == n) {
      std::vector<std::uint32_t> parent(n);
      for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
      auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      for (EdgeId id : chosen) {
        const auto a = find(g.edge(id).u), b = find(g.edge(id).v);
        if (a == b) return;
        parent[a] = b;
      }
      f(chosen);
      return;
    }
    for (EdgeId id = next; id < m; ++id) {
      if (m - id < n - 1 - chosen.size()) break;
      chosen.push_back(id);
      rec(id + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

inline std::size_t ceil_log2(std::size_t n) {
  std::size_t h = 0;
  while ((std::size_t{1} << h) < n) ++h;
  return h;
}

// Full-branching-tree bounds; returns a description of the first violation,
// or an empty string.
inline std::string structure_violation(const BoruvkaTree& b, std::size_t n) {
  const auto nodes = b.nodes();
  std::size_t leaves = 0;
  for (const BNode& node : nodes) {
    if (node.children.empty()) {
      ++leaves;
      std::size_t depth = 0;
      for (NodeId x = node.id; x != b.root(); x = nodes[x].parent) ++depth;
      if (depth != b.height()) return "leaf " + std::to_string(node.id) + " at depth " + std::to_string(depth);
      if (node.level != 0) return "leaf above level 0";
    } else {
      if (node.children.size() < 2) return "internal node " + std::to_string(node.id) + " has one child";
      for (NodeId c : node.children) {
        if (nodes[c].parent != node.id) return "child/parent mismatch";
        if (nodes[c].level + 1 != node.level) return "level skip";
      }
    }
  }
  if (leaves != n || b.leaf_count() != n) return "leaf count " + std::to_string(leaves);
  if (nodes.size() > 2 * n) return "node count " + std::to_string(nodes.size());
  if (b.height() > ceil_log2(n)) return "height " + std::to_string(b.height());
  const auto phases = b.phase_sizes();
  for (std::size_t i = 1; i < phases.size(); ++i) {
    if (phases[i] > (phases[i - 1] + 1) / 2) return "phase did not halve components";
  }
  return {};
}

}  // namespace mstv::testing
