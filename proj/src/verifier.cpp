#include "mstv/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mstv/disjoint_sets.hpp"
#include "mstv/error.hpp"

namespace mstv {

std::string_view to_string(VerifyMode mode) noexcept {
  switch (mode) {
    case VerifyMode::Adjacency: return "adjacency";
    case VerifyMode::EdgeList: return "edgelist";
    case VerifyMode::ClassicalOnly: return "classical";
  }
  return "unknown";
}

std::size_t restarts_for(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "delta must lie in (0, 1)");
  }
  return static_cast<std::size_t>(std::ceil(std::log2(1.0 / delta)));
}

namespace {

std::size_t row_offset(std::size_t n, std::size_t a) { return a * (2 * n - a - 1) / 2; }

Verdict not_minimal(const Graph& g, const SpanningTree& t, const Witness& w) {
  Verdict v;
  v.status = Verdict::Status::NotMinimal;
  v.witness = w;
  v.improved_tree = improve(g, t, w);
  v.weight_delta = tree_weight(g, *v.improved_tree) - tree_weight(g, t);
  return v;
}

void finish_report(QueryReport& report, const InstrumentedOracle& o, std::size_t n) {
  report.classical_weight_queries = o.classical_queries();
  report.quantum_oracle_applications = o.quantum_queries();
  report.oracle_constant =
      static_cast<double>(report.classical_weight_queries + report.quantum_oracle_applications) /
      static_cast<double>(n);
}

}  // namespace

std::pair<VertexId, VertexId> unrank_pair(std::size_t n, std::size_t index) {
  if (n < 2 || index >= n * (n - 1) / 2) {
    throw Error(ErrorKind::IndexOutOfRange, "pair index " + std::to_string(index) + " out of range");
  }
  std::size_t lo = 0, hi = n - 2;  // largest a with row_offset(a) <= index
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (row_offset(n, mid) <= index) lo = mid;
    else hi = mid - 1;
  }
  const std::size_t b = lo + 1 + (index - row_offset(n, lo));
  return {static_cast<VertexId>(lo), static_cast<VertexId>(b)};
}

std::size_t rank_pair(std::size_t n, VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  if (a == b || b >= n) throw Error(ErrorKind::IndexOutOfRange, "not a vertex pair");
  return row_offset(n, a) + (b - a - 1);
}

bool is_violating(const Graph& g, const SpanningTree& t, const BoruvkaTree& b, EdgeId e,
                  InstrumentedOracle& o, QueryContext ctx, std::uint64_t* work) {
  if (t.contains(e)) return false;
  const Weight w = o.query_edge_weight(e, ctx);
  const Edge& edge = g.edge(e);
  std::uint64_t steps = 0;
  const PathMaxAnswer path = b.path_max(edge.u, edge.v, steps);
  if (work != nullptr) *work += steps + 1;
  return w < path.max_weight;
}

VerifyResult classical_verify(const Graph& g, const SpanningTree& t, InstrumentedOracle& o) {
  VerifyResult result;
  QueryReport& report = result.report;
  report.mode = VerifyMode::ClassicalOnly;

  const BoruvkaTree b = build_boruvka_tree(g, t, o);
  report.work_ops = b.build_work();

  std::optional<EdgeId> first;
  for (const Edge& e : g.edges()) {
    if (t.contains(e.id)) continue;
    if (!is_violating(g, t, b, e.id, o, QueryContext::Classical, &report.work_ops)) continue;
    ++report.work_ops;
    if (!first || edge_less(e, g.edge(*first))) first = e.id;
  }

  if (first) {
    const Edge& e = g.edge(*first);
    const Witness w{*first, b.path_max(e.u, e.v).max_edge_id};
    result.verdict = not_minimal(g, t, w);
  }
  finish_report(report, o, g.vertex_count());
  return result;
}

VerifyResult quantum_verify(const Graph& g, const SpanningTree& t, InstrumentedOracle& o,
                            VerifyMode mode, std::uint64_t rng_seed, const QuantumConfig& config) {
  if (mode == VerifyMode::ClassicalOnly) {
    throw Error(ErrorKind::InvalidArgument, "quantum verification needs adjacency or edgelist mode");
  }
  const OracleModel expected =
      mode == VerifyMode::Adjacency ? OracleModel::AdjacencyMatrix : OracleModel::EdgeList;
  if (o.model() != expected) {
    throw Error(ErrorKind::InvalidArgument, "oracle model does not match verification mode");
  }
  if (mode == VerifyMode::Adjacency && g.has_parallel_edges()) {
    throw Error(ErrorKind::ParallelEdge, "adjacency-matrix model cannot represent parallel edges");
  }

  VerifyResult result;
  QueryReport& report = result.report;
  report.mode = mode;
  report.delta = config.delta;
  report.restarts = restarts_for(config.delta);

  const BoruvkaTree b = build_boruvka_tree(g, t, o);
  report.work_ops = b.build_work();

  const std::size_t n = g.vertex_count();
  // Candidate index -> edge id, or kNoEdge for a vertex pair with no edge.
  auto candidate = [&](std::size_t index) -> EdgeId {
    if (mode == VerifyMode::EdgeList) return static_cast<EdgeId>(index);
    auto [a, c] = unrank_pair(n, index);
    return g.find_edge(a, c).value_or(kNoEdge);
  };
  // The simulated oracle's action on one basis state: stored weight against
  // the Borůvka path maximum, no query charged here.
  auto marker = [&](std::size_t index) {
    const EdgeId id = candidate(index);
    if (id == kNoEdge || t.contains(id)) return false;
    const Edge& e = g.edge(id);
    return e.w < b.path_max(e.u, e.v).max_weight;
  };

  const std::size_t logical = mode == VerifyMode::EdgeList ? g.edge_count() : n * (n - 1) / 2;
  report.search_logical_size = logical;
  if (logical > 0) {
    const SearchSpace space(logical, marker);
    report.search_domain_size = space.domain_size();

    BbhtConfig bbht;
    bbht.growth = config.growth;
    bbht.cutoff_factor = config.cutoff_factor;
    bbht.schedules = report.restarts;
    bbht.statevector_cap = config.statevector_cap;
    const BbhtResult found = bbht_search(space, rng_seed, o, bbht);

    report.grover_iterations = found.stats.iterations;
    report.schedule_checks = found.checks;
    report.analytic_mode = found.analytic;
    report.quantum_budget =
        report.restarts * bbht_cutoff(space.domain_size(), config.cutoff_factor) + found.checks;
    // Each application evaluates one weight plus one Borůvka ascent.
    report.work_ops += (found.stats.iterations + found.checks) * (b.height() + 1);

    if (found.found) {
      const EdgeId id = candidate(*found.found);
      const Edge& e = g.edge(id);
      const Witness w{id, b.path_max(e.u, e.v).max_edge_id};
      certify_witness(g, t, w);
      result.verdict = not_minimal(g, t, w);
    }
  }
  finish_report(report, o, n);
  return result;
}

void certify_witness(const Graph& g, const SpanningTree& t, const Witness& w) {
  if (w.violating_edge_id >= g.edge_count() || w.replaced_edge_id >= g.edge_count()) {
    throw Error(ErrorKind::InvalidWitness, "witness names an edge outside the graph");
  }
  if (t.contains(w.violating_edge_id)) {
    throw Error(ErrorKind::InvalidWitness, "violating edge is already in the tree");
  }
  if (!t.contains(w.replaced_edge_id)) {
    throw Error(ErrorKind::InvalidWitness, "replaced edge is not in the tree");
  }
  const Edge& in = g.edge(w.violating_edge_id);
  const Edge& out = g.edge(w.replaced_edge_id);
  const std::vector<EdgeId> path = tree_path(g, t, in.u, in.v);
  if (std::find(path.begin(), path.end(), out.id) == path.end()) {
    throw Error(ErrorKind::InvalidWitness, "replaced edge is not on the violating edge's tree path");
  }
  if (!(in.w < out.w)) {
    throw Error(ErrorKind::InvalidWitness, "swap does not decrease the tree weight");
  }
}

SpanningTree improve(const Graph& g, const SpanningTree& t, const Witness& w) {
  certify_witness(g, t, w);
  std::vector<EdgeId> ids(t.edge_ids().begin(), t.edge_ids().end());
  std::replace(ids.begin(), ids.end(), w.replaced_edge_id, w.violating_edge_id);
  return SpanningTree::create(g, std::move(ids));
}

SpanningTree kruskal_mst(const Graph& g) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return edge_less(g.edge(a), g.edge(b)); });
  DisjointSets forest(g.vertex_count());
  std::vector<EdgeId> chosen;
  chosen.reserve(g.vertex_count() - 1);
  for (EdgeId id : order) {
    if (forest.unite(g.edge(id).u, g.edge(id).v)) chosen.push_back(id);
    if (chosen.size() + 1 == g.vertex_count()) break;
  }
  return SpanningTree::create(g, std::move(chosen));
}

}  // namespace mstv
