#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mstv/graph.hpp"
#include "mstv/oracle.hpp"

namespace mstv {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct BNode {
  NodeId id = 0;
  NodeId parent = kNoNode;
  // Edge this node selected when it merged into its parent; unset on the root.
  Weight branch_weight = 0.0;
  EdgeId branch_edge_id = kNoEdge;
  std::vector<NodeId> children;
  std::uint32_t level = 0;  // leaves are level 0
};

struct PathMaxAnswer {
  Weight max_weight = 0.0;
  EdgeId max_edge_id = kNoEdge;

  friend bool operator==(const PathMaxAnswer&, const PathMaxAnswer&) = default;
};

/// Borůvka tree of a spanning tree: leaves are the vertices, each level is one
/// contraction phase, and branch weights record the edge a component chose.
/// The heaviest branch between two leaves and their lowest common ancestor is
/// the heaviest edge on the tree path between the two vertices.
class BoruvkaTree {
 public:
  std::span<const BNode> nodes() const noexcept { return nodes_; }
  const BNode& node(NodeId id) const { return nodes_.at(id); }
  NodeId leaf_of(VertexId v) const { return leaf_of_.at(v); }
  NodeId root() const noexcept { return root_; }
  std::uint32_t height() const noexcept { return height_; }
  std::size_t leaf_count() const noexcept { return leaf_of_.size(); }

  // Throws Error{SameVertex} if u == v, Error{IndexOutOfRange} if either
  // vertex is outside the tree.
  PathMaxAnswer path_max(VertexId u, VertexId v) const;
  // As above, adding the number of ascent steps taken to `steps`.
  PathMaxAnswer path_max(VertexId u, VertexId v, std::uint64_t& steps) const;

  // Comparisons and union-find work spent during construction.
  std::uint64_t build_work() const noexcept { return build_work_; }
  // Component counts at the start of each phase, then 1.
  std::span<const std::size_t> phase_sizes() const noexcept { return phase_sizes_; }

  // One line per node: "id level parent branch_weight branch_edge_id", with
  // "-" for the root's missing fields.
  std::string dump() const;

 private:
  friend BoruvkaTree build_boruvka_tree(const Graph&, const SpanningTree&, InstrumentedOracle&);

  std::vector<BNode> nodes_;
  std::vector<NodeId> leaf_of_;
  NodeId root_ = 0;
  std::uint32_t height_ = 0;
  std::uint64_t build_work_ = 0;
  std::vector<std::size_t> phase_sizes_;
};

// Reads each tree-edge weight through the oracle exactly once (n-1 classical
// queries) and then runs Borůvka phases on the tree.
BoruvkaTree build_boruvka_tree(const Graph& g, const SpanningTree& t, InstrumentedOracle& o);

// Reference path maximum by walking the tree path. Throws Error{SameVertex}.
PathMaxAnswer direct_path_max(const Graph& g, const SpanningTree& t, VertexId u, VertexId v);

// Path maxima from `source` to every vertex (nullopt at the source itself).
std::vector<std::optional<PathMaxAnswer>> direct_path_max_from(const Graph& g,
                                                               const SpanningTree& t,
                                                               VertexId source);

// The tree-edge ids on the path between u and v.
std::vector<EdgeId> tree_path(const Graph& g, const SpanningTree& t, VertexId u, VertexId v);

}  // namespace mstv
