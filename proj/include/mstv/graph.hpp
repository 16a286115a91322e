#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace mstv {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = double;

inline constexpr Weight kInfiniteWeight = std::numeric_limits<Weight>::infinity();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;  // u < v after normalization
  VertexId v = 0;
  Weight w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Strict total order on edges: weight first, id breaks ties.
constexpr bool edge_less(Weight wa, EdgeId ia, Weight wb, EdgeId ib) noexcept {
  return wa < wb || (wa == wb && ia < ib);
}
constexpr bool edge_less(const Edge& a, const Edge& b) noexcept {
  return edge_less(a.w, a.id, b.w, b.id);
}

/// Weighted undirected graph on vertices 0..n-1. Immutable once built;
/// construction validates endpoints, self-loops, weights and connectivity.
/// Parallel edges are kept, each with its own id.
class Graph {
 public:
  struct RawEdge {
    VertexId u;
    VertexId v;
    Weight w;
  };

  // Throws Error{SelfLoop | InvalidWeight | InvalidArgument | Disconnected}.
  static Graph create(std::size_t n, std::span<const RawEdge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  // The (w, id)-least edge joining a and b, if any.
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool has_parallel_edges() const noexcept { return has_parallel_; }

  // Incident edge ids per vertex.
  std::span<const EdgeId> incident(VertexId v) const noexcept {
    return {incidence_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

 private:
  Graph() = default;

  std::uint64_t pair_key(VertexId a, VertexId b) const noexcept {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n_ + b;
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> incidence_;
  std::unordered_map<std::uint64_t, EdgeId> pair_index_;
  bool has_parallel_ = false;
};

/// n-1 edges of a parent graph forming a spanning tree.
class SpanningTree {
 public:
  // Throws Error{NotInGraph} for unknown ids, Error{NotSpanning} for wrong
  // count, repeated edges, or cycles.
  static SpanningTree create(const Graph& g, std::vector<EdgeId> edge_ids);

  std::span<const EdgeId> edge_ids() const noexcept { return edge_ids_; }
  bool contains(EdgeId id) const noexcept {
    return id < membership_.size() && membership_[id];
  }
  std::size_t vertex_count() const noexcept { return n_; }

  // Ids in ascending order, for canonical output.
  std::vector<EdgeId> sorted_ids() const;

 private:
  SpanningTree() = default;

  std::size_t n_ = 0;
  std::vector<EdgeId> edge_ids_;
  std::vector<bool> membership_;
};

// Sum of stored tree-edge weights; no oracle involvement.
Weight tree_weight(const Graph& g, const SpanningTree& t);

}  // namespace mstv
