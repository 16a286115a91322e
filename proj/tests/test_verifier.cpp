#include <random>

#include "doctest.h"
#include "mstv/disjoint_sets.hpp"
#include "mstv/error.hpp"
#include "mstv/generate.hpp"
#include "mstv/verifier.hpp"
#include "support.hpp"

using namespace mstv;
using mstv::testing::make_graph;
using mstv::testing::triangle;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an mstv::Error");
  return ErrorKind::InvalidArgument;
}

void check_verdict_invariants(const Graph& g, const SpanningTree& t, const Verdict& v) {
  if (v.minimal()) {
    CHECK_FALSE(v.witness.has_value());
    return;
  }
  REQUIRE(v.witness.has_value());
  REQUIRE(v.improved_tree.has_value());
  const Edge& in = g.edge(v.witness->violating_edge_id);
  const Edge& out = g.edge(v.witness->replaced_edge_id);
  CHECK(in.w < out.w);
  CHECK(direct_path_max(g, t, in.u, in.v).max_edge_id == out.id);
  CHECK(v.weight_delta < 0.0);
  CHECK(tree_weight(g, *v.improved_tree) ==
        doctest::Approx(tree_weight(g, t) + v.weight_delta).epsilon(1e-12));
}

}  // namespace

TEST_CASE("is_violating") {
  const Graph g = triangle();
  InstrumentedOracle o(g, OracleModel::EdgeList);

  const SpanningTree heavy = SpanningTree::create(g, {0, 2});
  const BoruvkaTree bh = build_boruvka_tree(g, heavy, o);
  o.reset();
  CHECK(is_violating(g, heavy, bh, 1, o));
  CHECK(o.classical_queries() == 1);
  CHECK_FALSE(is_violating(g, heavy, bh, 0, o));
  CHECK(o.classical_queries() == 1);  // tree edges cost nothing

  const SpanningTree mst = SpanningTree::create(g, {0, 1});
  const BoruvkaTree bm = build_boruvka_tree(g, mst, o);
  CHECK_FALSE(is_violating(g, mst, bm, 2, o));
}

TEST_CASE("equal weights never violate") {
  // C4 plus both chords, all weight 1.
  const Graph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 2, 1}, {1, 3, 1}});
  mstv::testing::for_each_spanning_tree(g, [&](const std::vector<EdgeId>& ids) {
    const SpanningTree t = SpanningTree::create(g, ids);
    InstrumentedOracle o(g, OracleModel::EdgeList);
    const BoruvkaTree b = build_boruvka_tree(g, t, o);
    for (EdgeId e = 0; e < g.edge_count(); ++e) REQUIRE_FALSE(is_violating(g, t, b, e, o));
    REQUIRE(classical_verify(g, t, o).verdict.minimal());
  });
}

TEST_CASE("classical_verify on the triangle") {
  const Graph g = triangle();
  SUBCASE("minimal tree") {
    InstrumentedOracle o(g, OracleModel::EdgeList);
    const auto [verdict, report] = classical_verify(g, SpanningTree::create(g, {0, 1}), o);
    CHECK(verdict.minimal());
    CHECK(report.classical_weight_queries == 3);
    CHECK(report.quantum_oracle_applications == 0);
    CHECK(report.mode == VerifyMode::ClassicalOnly);
  }
  SUBCASE("heavier tree") {
    InstrumentedOracle o(g, OracleModel::EdgeList);
    const SpanningTree t = SpanningTree::create(g, {0, 2});
    const auto [verdict, report] = classical_verify(g, t, o);
    REQUIRE_FALSE(verdict.minimal());
    CHECK(verdict.witness == Witness{1, 2});
    CHECK(verdict.improved_tree->sorted_ids() == std::vector<EdgeId>{0, 1});
    CHECK(tree_weight(g, *verdict.improved_tree) == 3.0);
    CHECK(verdict.weight_delta == -1.0);
    check_verdict_invariants(g, t, verdict);
  }
}

TEST_CASE("classical_verify picks the (w, id)-least violating edge") {
  // Path 0-1-2-3 with heavy edges; chords 0-2 (w 3) and 1-3 (w 3) both
  // violate, the lower id wins.
  const Graph g = make_graph(4, {{0, 1, 10}, {1, 2, 10}, {2, 3, 10}, {1, 3, 3}, {0, 2, 3}});
  InstrumentedOracle o(g, OracleModel::EdgeList);
  const SpanningTree t = SpanningTree::create(g, {0, 1, 2});
  const auto [verdict, report] = classical_verify(g, t, o);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->violating_edge_id == 3);
  check_verdict_invariants(g, t, verdict);
}

TEST_CASE("classical_verify on two vertices") {
  const Graph g = make_graph(2, {{0, 1, 2.5}});
  InstrumentedOracle o(g, OracleModel::EdgeList);
  const auto [verdict, report] = classical_verify(g, SpanningTree::create(g, {0}), o);
  CHECK(verdict.minimal());
  CHECK(report.classical_weight_queries == 1);
}

TEST_CASE("quantum_verify on the triangle agrees with the classical scan") {
  const Graph g = triangle();
  const SpanningTree heavy = SpanningTree::create(g, {0, 2});
  const SpanningTree mst = SpanningTree::create(g, {0, 1});
  for (VerifyMode mode : {VerifyMode::EdgeList, VerifyMode::Adjacency}) {
    const OracleModel model =
        mode == VerifyMode::EdgeList ? OracleModel::EdgeList : OracleModel::AdjacencyMatrix;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      InstrumentedOracle o(g, model);
      const auto [verdict, report] = quantum_verify(g, heavy, o, mode, seed);
      REQUIRE_FALSE(verdict.minimal());
      REQUIRE(verdict.witness == Witness{1, 2});
      REQUIRE(report.classical_weight_queries == 2);
      REQUIRE(report.quantum_oracle_applications <= report.quantum_budget);
      REQUIRE(report.quantum_oracle_applications == report.grover_iterations + report.schedule_checks);

      InstrumentedOracle o2(g, model);
      const auto minimal = quantum_verify(g, mst, o2, mode, seed);
      REQUIRE(minimal.verdict.minimal());
      REQUIRE(minimal.report.restarts == 7);
      REQUIRE(minimal.report.schedule_checks >= minimal.report.restarts);
    }
  }
}

TEST_CASE("quantum_verify argument checks") {
  const Graph g = triangle();
  const SpanningTree t = SpanningTree::create(g, {0, 1});
  InstrumentedOracle edges(g, OracleModel::EdgeList);
  CHECK(kind_of([&] { quantum_verify(g, t, edges, VerifyMode::Adjacency, 0); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { quantum_verify(g, t, edges, VerifyMode::ClassicalOnly, 0); }) ==
        ErrorKind::InvalidArgument);
  QuantumConfig bad;
  bad.delta = 0.0;
  CHECK(kind_of([&] { quantum_verify(g, t, edges, VerifyMode::EdgeList, 0, bad); }) ==
        ErrorKind::InvalidArgument);

  const Graph multi = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 1, 2}});
  const SpanningTree mt = SpanningTree::create(multi, {0, 1});
  InstrumentedOracle adj(multi, OracleModel::AdjacencyMatrix);
  CHECK(kind_of([&] { quantum_verify(multi, mt, adj, VerifyMode::Adjacency, 0); }) ==
        ErrorKind::ParallelEdge);
  InstrumentedOracle el(multi, OracleModel::EdgeList);
  CHECK(quantum_verify(multi, mt, el, VerifyMode::EdgeList, 0).verdict.minimal());
}

TEST_CASE("single vertex graphs are trivially minimal") {
  const Graph g = Graph::create(1, {});
  const SpanningTree t = SpanningTree::create(g, {});
  InstrumentedOracle o(g, OracleModel::AdjacencyMatrix);
  const auto r = quantum_verify(g, t, o, VerifyMode::Adjacency, 0);
  CHECK(r.verdict.minimal());
  CHECK(r.report.quantum_oracle_applications == 0);
}

TEST_CASE("pair ranking") {
  for (std::size_t n : {2u, 3u, 7u, 30u}) {
    std::size_t index = 0;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b, ++index) {
        REQUIRE(unrank_pair(n, index) == std::pair<VertexId, VertexId>{a, b});
        REQUIRE(rank_pair(n, b, a) == index);
      }
    }
    CHECK_THROWS_AS(unrank_pair(n, index), Error);
  }
}

TEST_CASE("improve") {
  const Graph g = triangle();
  const SpanningTree t = SpanningTree::create(g, {0, 2});
  const SpanningTree better = improve(g, t, {1, 2});
  CHECK(better.sorted_ids() == std::vector<EdgeId>{0, 1});
  CHECK(tree_weight(g, better) == 3.0);

  CHECK(kind_of([&] { improve(g, t, {0, 2}); }) == ErrorKind::InvalidWitness);  // already in T
  CHECK(kind_of([&] { improve(g, t, {1, 1}); }) == ErrorKind::InvalidWitness);  // out not in T
  const SpanningTree mst = SpanningTree::create(g, {0, 1});
  CHECK(kind_of([&] { improve(g, mst, {2, 1}); }) == ErrorKind::InvalidWitness);  // not lighter

  const Graph path = make_graph(4, {{0, 1, 9}, {1, 2, 9}, {2, 3, 1}, {2, 3, 0.5}});
  const SpanningTree pt = SpanningTree::create(path, {0, 1, 2});
  // Edge 3 is parallel to edge 2; edge 0 is not on its path.
  CHECK(kind_of([&] { improve(path, pt, {3, 0}); }) == ErrorKind::InvalidWitness);
  CHECK(improve(path, pt, {3, 2}).sorted_ids() == std::vector<EdgeId>{0, 1, 3});
}

TEST_CASE("property: random witnesses keep a spanning tree") {
  std::mt19937_64 rng(21);
  int swaps = 0;
  while (swaps < 10000) {
    const std::size_t n = 3 + rng() % 20;
    const Graph g = mstv::testing::random_graph_with_tree(n, n + rng() % 20, 6, rng);
    const SpanningTree t = random_spanning_tree(g, rng);
    for (const Edge& e : g.edges()) {
      if (t.contains(e.id)) continue;
      for (EdgeId out : tree_path(g, t, e.u, e.v)) {
        if (!(e.w < g.edge(out).w)) {
          REQUIRE_THROWS_AS(improve(g, t, {e.id, out}), Error);
          continue;
        }
        const SpanningTree s = improve(g, t, {e.id, out});
        DisjointSets sets(n);
        for (EdgeId id : s.edge_ids()) sets.unite(g.edge(id).u, g.edge(id).v);
        REQUIRE(sets.set_count() == 1);
        REQUIRE(tree_weight(g, s) < tree_weight(g, t));
        ++swaps;
      }
    }
  }
}

TEST_CASE("kruskal_mst") {
  const Graph g = triangle();
  const SpanningTree mst = kruskal_mst(g);
  CHECK(mst.sorted_ids() == std::vector<EdgeId>{0, 1});
  CHECK(tree_weight(g, mst) == 3.0);

  const Graph tree = make_graph(5, {{0, 1, 4}, {1, 2, 1}, {1, 3, 7}, {3, 4, 2}});
  CHECK(kruskal_mst(tree).sorted_ids() == std::vector<EdgeId>{0, 1, 2, 3});
}

TEST_CASE("property: Minimal iff weight equals the Kruskal weight") {
  std::mt19937_64 rng(8);
  int minimal = 0, not_minimal = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const Graph g = mstv::testing::random_graph_with_tree(n, rng() % (2 * n), 4, rng);
    const SpanningTree t = trial % 2 ? random_spanning_tree(g, rng) : kruskal_mst(g);
    InstrumentedOracle o(g, OracleModel::EdgeList);
    const auto [verdict, report] = classical_verify(g, t, o);
    REQUIRE(verdict.minimal() == (tree_weight(g, t) == tree_weight(g, kruskal_mst(g))));
    REQUIRE(report.classical_weight_queries == (n - 1) + (g.edge_count() - (n - 1)));
    check_verdict_invariants(g, t, verdict);
    (verdict.minimal() ? minimal : not_minimal)++;
  }
  CHECK(minimal > 500);
  CHECK(not_minimal > 500);
}

TEST_CASE("property: quantum edge-list mode finds perturbations") {
  std::mt19937_64 rng(64);
  int runs = 0, agree = 0;
  while (runs < 1000) {
    const std::size_t n = 4 + rng() % 61;
    const std::size_t m = std::min(n * (n - 1) / 2, n + rng() % (4 * n));
    const Graph g = random_connected_graph(n, m, {1, 20}, rng);
    const auto t = perturb_tree(g, kruskal_mst(g), rng);
    if (!t) continue;
    InstrumentedOracle o(g, OracleModel::EdgeList);
    const auto [verdict, report] = quantum_verify(g, *t, o, VerifyMode::EdgeList, runs);
    ++runs;
    REQUIRE(report.classical_weight_queries == n - 1);
    REQUIRE(report.quantum_oracle_applications <= report.quantum_budget);
    if (!verdict.minimal()) {
      ++agree;
      check_verdict_invariants(g, *t, verdict);
    }
  }
  CHECK(agree >= 990);
}

TEST_CASE("adjacency mode stays within a linear query budget") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {8u, 16u, 32u, 64u}) {
    const Graph g = random_connected_graph(n, 3 * n, {1, 50}, rng);
    for (bool perturbed : {false, true}) {
      SpanningTree t = kruskal_mst(g);
      if (perturbed) t = *perturb_tree(g, t, rng);
      InstrumentedOracle o(g, OracleModel::AdjacencyMatrix);
      const auto [verdict, report] = quantum_verify(g, t, o, VerifyMode::Adjacency, n);
      CHECK(verdict.minimal() == !perturbed);
      CHECK(report.search_logical_size == n * (n - 1) / 2);
      CHECK(report.classical_weight_queries == n - 1);
      CHECK(report.quantum_oracle_applications <= report.quantum_budget);
      // cutoff = 9 ceil(sqrt(N)) with N < n^2, so the budget is linear in n
      // apart from the checks, of which there are at most one per iteration
      // bound increment.
      CHECK(report.grover_iterations <= report.restarts * 9 * n);
      CHECK(report.oracle_constant ==
            doctest::Approx(double(report.classical_weight_queries + report.quantum_oracle_applications) / n));
    }
  }
}

TEST_CASE("analytic mode gives the same verdicts") {
  std::mt19937_64 rng(5);
  QuantumConfig cfg;
  cfg.statevector_cap = 16;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(20, 60, {1, 30}, rng);
    auto t = perturb_tree(g, kruskal_mst(g), rng);
    REQUIRE(t.has_value());
    InstrumentedOracle o(g, OracleModel::EdgeList);
    const auto r = quantum_verify(g, *t, o, VerifyMode::EdgeList, trial, cfg);
    REQUIRE(r.report.analytic_mode);
    check_verdict_invariants(g, *t, r.verdict);
    InstrumentedOracle o2(g, OracleModel::EdgeList);
    REQUIRE(quantum_verify(g, kruskal_mst(g), o2, VerifyMode::EdgeList, trial, cfg).verdict.minimal());
  }
}
