#include "mstv/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mstv/disjoint_sets.hpp"
#include "mstv/error.hpp"

namespace mstv {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidWeight: return "InvalidWeight";
    case ErrorKind::NotInGraph: return "NotInGraph";
    case ErrorKind::NotSpanning: return "NotSpanning";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::KZero: return "KZero";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::ParallelEdge: return "ParallelEdge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Graph Graph::create(std::size_t n, std::span<const RawEdge> raw) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "graph needs at least one vertex");
  if (n > std::numeric_limits<VertexId>::max()) {
    throw Error(ErrorKind::InvalidArgument, "too many vertices");
  }
  if (raw.size() >= kNoEdge) throw Error(ErrorKind::InvalidArgument, "too many edges");

  Graph g;
  g.n_ = n;
  g.edges_.reserve(raw.size());
  DisjointSets components(n);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [u, v, w] = raw[i];
    if (u >= n || v >= n) {
      throw Error(ErrorKind::InvalidArgument,
                  "edge " + std::to_string(i) + " has an endpoint outside [0, n)");
    }
    if (u == v) {
      throw Error(ErrorKind::SelfLoop, "edge " + std::to_string(i) + " is a self-loop on vertex " +
                                           std::to_string(u));
    }
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorKind::InvalidWeight,
                  "edge " + std::to_string(i) + " weight must be finite and non-negative");
    }
    if (u > v) std::swap(u, v);
    g.edges_.push_back(Edge{static_cast<EdgeId>(i), u, v, w});
    components.unite(u, v);
  }
  if (components.set_count() != 1) {
    throw Error(ErrorKind::Disconnected, "graph has " + std::to_string(components.set_count()) +
                                             " connected components");
  }

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.incidence_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.incidence_[cursor[e.u]++] = e.id;
    g.incidence_[cursor[e.v]++] = e.id;
  }

  g.pair_index_.reserve(g.edges_.size());
  for (const Edge& e : g.edges_) {
    auto [it, inserted] = g.pair_index_.try_emplace(g.pair_key(e.u, e.v), e.id);
    if (!inserted) {
      g.has_parallel_ = true;
      if (edge_less(e, g.edges_[it->second])) it->second = e.id;
    }
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  auto it = pair_index_.find(pair_key(a, b));
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

SpanningTree SpanningTree::create(const Graph& g, std::vector<EdgeId> edge_ids) {
  const std::size_t n = g.vertex_count();
  for (EdgeId id : edge_ids) {
    if (id >= g.edge_count()) {
      throw Error(ErrorKind::NotInGraph, "edge index " + std::to_string(id) + " is not in the graph");
    }
  }
  if (edge_ids.size() != n - 1) {
    throw Error(ErrorKind::NotSpanning, "spanning tree needs " + std::to_string(n - 1) +
                                            " edges, got " + std::to_string(edge_ids.size()));
  }
  SpanningTree t;
  t.n_ = n;
  t.membership_.assign(g.edge_count(), false);
  DisjointSets components(n);
  for (EdgeId id : edge_ids) {
    if (t.membership_[id]) {
      throw Error(ErrorKind::NotSpanning, "edge " + std::to_string(id) + " listed twice");
    }
    t.membership_[id] = true;
    const Edge& e = g.edge(id);
    if (!components.unite(e.u, e.v)) {
      throw Error(ErrorKind::NotSpanning, "edge " + std::to_string(id) + " closes a cycle");
    }
  }
  t.edge_ids_ = std::move(edge_ids);
  return t;
}

std::vector<EdgeId> SpanningTree::sorted_ids() const {
  std::vector<EdgeId> ids = edge_ids_;
  std::sort(ids.begin(), ids.end());
  return ids;
}

Weight tree_weight(const Graph& g, const SpanningTree& t) {
  // Summing in weight order makes the total depend only on the weight
  // multiset, so trees with equal multisets compare exactly equal.
  std::vector<Weight> weights;
  weights.reserve(t.edge_ids().size());
  for (EdgeId id : t.edge_ids()) weights.push_back(g.edge(id).w);
  std::sort(weights.begin(), weights.end());
  Weight total = 0.0;
  for (Weight w : weights) total += w;
  return total;
}

}  // namespace mstv
