#include "mstv/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "mstv/boruvka.hpp"
#include "mstv/error.hpp"

namespace mstv {

Graph random_connected_graph(std::size_t n, std::size_t m, WeightRange weights,
                             std::mt19937_64& rng) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m + 1 < n || m > max_edges) {
    throw Error(ErrorKind::InvalidArgument, "need n-1 <= m <= n(n-1)/2 for a connected simple graph");
  }
  const double lo = std::ceil(weights.lo);
  const double hi = std::floor(weights.hi);
  if (!(lo <= hi) || lo < 0.0 || !std::isfinite(hi)) {
    throw Error(ErrorKind::InvalidArgument, "weight range must contain a non-negative integer");
  }
  std::uniform_int_distribution<std::int64_t> draw_weight(static_cast<std::int64_t>(lo),
                                                          static_cast<std::int64_t>(hi));

  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  std::unordered_set<std::uint64_t> present;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(m);
  auto key = [n](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n + b;
  };
  auto add = [&](VertexId a, VertexId b) {
    if (present.insert(key(a, b)).second) pairs.emplace_back(a, b);
  };

  for (std::size_t i = 1; i < n; ++i) {
    add(perm[i], perm[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)]);
  }
  if (m - pairs.size() > (max_edges - pairs.size()) / 2) {
    // Dense: choose among the complement explicitly.
    std::vector<std::pair<VertexId, VertexId>> rest;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (!present.count(key(a, b))) rest.emplace_back(a, b);
      }
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    for (std::size_t i = 0; pairs.size() < m; ++i) add(rest[i].first, rest[i].second);
  } else {
    std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
    while (pairs.size() < m) {
      const VertexId a = vertex(rng);
      const VertexId b = vertex(rng);
      if (a != b) add(a, b);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<Graph::RawEdge> raw;
  raw.reserve(m);
  for (auto [a, b] : pairs) raw.push_back({a, b, static_cast<Weight>(draw_weight(rng))});
  return Graph::create(n, raw);
}

SpanningTree random_spanning_tree(const Graph& g, std::mt19937_64& rng) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_tree(n, false);
  std::vector<EdgeId> next(n, kNoEdge);
  in_tree[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = true;
  auto other = [&](EdgeId id, VertexId x) {
    const Edge& e = g.edge(id);
    return e.u == x ? e.v : e.u;
  };

  std::vector<EdgeId> ids;
  ids.reserve(n - 1);
  for (VertexId start = 0; start < n; ++start) {
    // Random walk until it hits the tree; overwriting `next` erases loops.
    for (VertexId x = start; !in_tree[x];) {
      auto inc = g.incident(x);
      next[x] = inc[std::uniform_int_distribution<std::size_t>(0, inc.size() - 1)(rng)];
      x = other(next[x], x);
    }
    for (VertexId x = start; !in_tree[x]; x = other(next[x], x)) {
      in_tree[x] = true;
      ids.push_back(next[x]);
    }
  }
  return SpanningTree::create(g, std::move(ids));
}

std::optional<SpanningTree> perturb_tree(const Graph& g, const SpanningTree& t,
                                         std::mt19937_64& rng) {
  std::vector<EdgeId> outside;
  for (const Edge& e : g.edges()) {
    if (!t.contains(e.id)) outside.push_back(e.id);
  }
  std::shuffle(outside.begin(), outside.end(), rng);
  for (EdgeId in : outside) {
    const Edge& e = g.edge(in);
    std::vector<EdgeId> lighter;
    for (EdgeId id : tree_path(g, t, e.u, e.v)) {
      if (g.edge(id).w < e.w) lighter.push_back(id);
    }
    if (lighter.empty()) continue;
    const EdgeId out = lighter[std::uniform_int_distribution<std::size_t>(0, lighter.size() - 1)(rng)];
    std::vector<EdgeId> ids(t.edge_ids().begin(), t.edge_ids().end());
    std::replace(ids.begin(), ids.end(), out, in);
    return SpanningTree::create(g, std::move(ids));
  }
  return std::nullopt;
}

}  // namespace mstv
