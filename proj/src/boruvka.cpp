#include "mstv/boruvka.hpp"

#include <string>

#include "mstv/disjoint_sets.hpp"
#include "mstv/error.hpp"
#include "mstv/io.hpp"

namespace mstv {
namespace {

struct PhaseEdge {
  std::uint32_t a;  // component indices in the current phase
  std::uint32_t b;
  Weight w;
  EdgeId id;
};

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

bool heavier(Weight wa, EdgeId ia, const PathMaxAnswer& best) {
  return best.max_edge_id == kNoEdge || edge_less(best.max_weight, best.max_edge_id, wa, ia);
}

struct TreeAdjacency {
  std::vector<std::size_t> offsets;
  std::vector<std::pair<VertexId, EdgeId>> entries;

  TreeAdjacency(const Graph& g, const SpanningTree& t) : offsets(g.vertex_count() + 1, 0) {
    for (EdgeId id : t.edge_ids()) {
      ++offsets[g.edge(id).u + 1];
      ++offsets[g.edge(id).v + 1];
    }
    for (std::size_t v = 0; v + 1 < offsets.size(); ++v) offsets[v + 1] += offsets[v];
    entries.resize(2 * t.edge_ids().size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (EdgeId id : t.edge_ids()) {
      const Edge& e = g.edge(id);
      entries[cursor[e.u]++] = {e.v, id};
      entries[cursor[e.v]++] = {e.u, id};
    }
  }

  std::span<const std::pair<VertexId, EdgeId>> neighbours(VertexId v) const {
    return {entries.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

void check_pair(std::size_t n, VertexId u, VertexId v) {
  if (u >= n || v >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex pair (" + std::to_string(u) + ", " + std::to_string(v) + ") outside the tree");
  }
  if (u == v) throw Error(ErrorKind::SameVertex, "path maximum needs two distinct vertices");
}

// Parent tree edge of every vertex when the tree is rooted at `root`, in DFS
// visiting order.
std::pair<std::vector<EdgeId>, std::vector<VertexId>> root_tree(const Graph& g,
                                                                const TreeAdjacency& adj,
                                                                VertexId root) {
  const std::size_t n = g.vertex_count();
  std::vector<EdgeId> parent_edge(n, kNoEdge);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<VertexId> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (auto [y, id] : adj.neighbours(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      parent_edge[y] = id;
      stack.push_back(y);
    }
  }
  return {std::move(parent_edge), std::move(order)};
}

}  // namespace

BoruvkaTree build_boruvka_tree(const Graph& g, const SpanningTree& t, InstrumentedOracle& o) {
  const std::size_t n = g.vertex_count();
  BoruvkaTree b;
  b.nodes_.reserve(2 * n);
  b.leaf_of_.resize(n);
  std::vector<NodeId> current(n);
  for (VertexId v = 0; v < n; ++v) {
    b.nodes_.push_back(BNode{static_cast<NodeId>(v), kNoNode, 0.0, kNoEdge, {}, 0});
    b.leaf_of_[v] = static_cast<NodeId>(v);
    current[v] = static_cast<NodeId>(v);
  }

  std::vector<PhaseEdge> edges;
  edges.reserve(t.edge_ids().size());
  for (EdgeId id : t.edge_ids()) {
    const Edge& e = g.edge(id);
    edges.push_back({e.u, e.v, o.query_edge_weight(id), id});
  }

  std::uint32_t level = 0;
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> next_index;
  while (current.size() > 1) {
    const std::size_t k = current.size();
    b.phase_sizes_.push_back(k);

    // Every component picks its (w, id)-least incident edge.
    best.assign(k, kUnset);
    for (std::uint32_t j = 0; j < edges.size(); ++j) {
      const PhaseEdge& e = edges[j];
      for (std::uint32_t c : {e.a, e.b}) {
        if (best[c] == kUnset || edge_less(e.w, e.id, edges[best[c]].w, edges[best[c]].id)) {
          best[c] = j;
        }
      }
      b.build_work_ += 2;
    }

    DisjointSets merged(k);
    for (std::uint32_t c = 0; c < k; ++c) {
      const PhaseEdge& e = edges[best[c]];
      merged.unite(e.a, e.b);
    }

    ++level;
    next_index.assign(k, kUnset);
    std::vector<NodeId> next;
    next.reserve(merged.set_count());
    for (std::uint32_t c = 0; c < k; ++c) {
      const std::uint32_t r = merged.find(c);
      if (next_index[r] == kUnset) {
        next_index[r] = static_cast<std::uint32_t>(next.size());
        const auto id = static_cast<NodeId>(b.nodes_.size());
        b.nodes_.push_back(BNode{id, kNoNode, 0.0, kNoEdge, {}, level});
        next.push_back(id);
      }
      const NodeId parent = next[next_index[r]];
      BNode& child = b.nodes_[current[c]];
      child.parent = parent;
      child.branch_weight = edges[best[c]].w;
      child.branch_edge_id = edges[best[c]].id;
      b.nodes_[parent].children.push_back(current[c]);
      ++b.build_work_;
    }

    // Contract: edges inside a merged component are exactly the selected ones.
    std::size_t kept = 0;
    for (const PhaseEdge& e : edges) {
      const std::uint32_t na = next_index[merged.find(e.a)];
      const std::uint32_t nb = next_index[merged.find(e.b)];
      if (na != nb) edges[kept++] = {na, nb, e.w, e.id};
    }
    edges.resize(kept);
    current = std::move(next);
  }
  b.phase_sizes_.push_back(current.size());
  b.root_ = current.front();
  b.height_ = level;
  return b;
}

PathMaxAnswer BoruvkaTree::path_max(VertexId u, VertexId v) const {
  std::uint64_t steps = 0;
  return path_max(u, v, steps);
}

PathMaxAnswer BoruvkaTree::path_max(VertexId u, VertexId v, std::uint64_t& steps) const {
  check_pair(leaf_of_.size(), u, v);
  PathMaxAnswer best;
  NodeId x = leaf_of_[u];
  NodeId y = leaf_of_[v];
  // Leaves share one depth, so both walks reach the common ancestor together.
  while (x != y) {
    const BNode& bx = nodes_[x];
    const BNode& by = nodes_[y];
    if (heavier(bx.branch_weight, bx.branch_edge_id, best)) best = {bx.branch_weight, bx.branch_edge_id};
    if (heavier(by.branch_weight, by.branch_edge_id, best)) best = {by.branch_weight, by.branch_edge_id};
    x = bx.parent;
    y = by.parent;
    ++steps;
  }
  return best;
}

std::string BoruvkaTree::dump() const {
  std::string out;
  for (const BNode& node : nodes_) {
    out += std::to_string(node.id) + " " + std::to_string(node.level) + " ";
    if (node.parent == kNoNode) {
      out += "- - -\n";
    } else {
      out += std::to_string(node.parent) + " " + format_weight(node.branch_weight) + " " +
             std::to_string(node.branch_edge_id) + "\n";
    }
  }
  return out;
}

PathMaxAnswer direct_path_max(const Graph& g, const SpanningTree& t, VertexId u, VertexId v) {
  check_pair(g.vertex_count(), u, v);
  PathMaxAnswer best;
  for (EdgeId id : tree_path(g, t, u, v)) {
    const Edge& e = g.edge(id);
    if (heavier(e.w, e.id, best)) best = {e.w, e.id};
  }
  return best;
}

std::vector<std::optional<PathMaxAnswer>> direct_path_max_from(const Graph& g,
                                                               const SpanningTree& t,
                                                               VertexId source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw Error(ErrorKind::IndexOutOfRange, "source vertex outside the tree");
  TreeAdjacency adj(g, t);
  auto [parent_edge, order] = root_tree(g, adj, source);
  std::vector<std::optional<PathMaxAnswer>> result(n);
  // DFS order visits every parent before its children.
  for (VertexId x : order) {
    if (x == source) continue;
    const Edge& e = g.edge(parent_edge[x]);
    const VertexId parent = e.u == x ? e.v : e.u;
    PathMaxAnswer best = result[parent].value_or(PathMaxAnswer{});
    if (heavier(e.w, e.id, best)) best = {e.w, e.id};
    result[x] = best;
  }
  return result;
}

std::vector<EdgeId> tree_path(const Graph& g, const SpanningTree& t, VertexId u, VertexId v) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex outside the tree");
  TreeAdjacency adj(g, t);
  auto [parent_edge, order] = root_tree(g, adj, u);
  std::vector<EdgeId> path;
  for (VertexId x = v; x != u;) {
    const Edge& e = g.edge(parent_edge[x]);
    path.push_back(e.id);
    x = e.u == x ? e.v : e.u;
  }
  return path;
}

}  // namespace mstv
