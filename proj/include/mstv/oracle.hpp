#pragma once

#include <atomic>
#include <cstdint>

#include "mstv/graph.hpp"

namespace mstv {

enum class OracleModel { AdjacencyMatrix, EdgeList };

// Which counter a query is charged to.
enum class QueryContext { Classical, Quantum };

struct EdgeRecord {
  VertexId u;
  VertexId v;
  Weight w;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Weight oracle over a graph, counting every query. Counters are atomic and
/// only ever grow until reset() is called.
class InstrumentedOracle {
 public:
  InstrumentedOracle(const Graph& g, OracleModel model) noexcept : graph_(&g), model_(model) {}

  InstrumentedOracle(const InstrumentedOracle&) = delete;
  InstrumentedOracle& operator=(const InstrumentedOracle&) = delete;

  OracleModel model() const noexcept { return model_; }
  const Graph& graph() const noexcept { return *graph_; }

  // Adjacency-matrix model: w(a, b), +inf for non-edges (and for a == b).
  // Parallel edges are seen through their (w, id)-least representative.
  // Throws Error{IndexOutOfRange} for vertices outside [0, n).
  Weight query_weight_adjacency(VertexId a, VertexId b,
                                QueryContext ctx = QueryContext::Classical);

  // Edge-list model: the i-th edge. Throws Error{IndexOutOfRange}.
  EdgeRecord query_edge(EdgeId i, QueryContext ctx = QueryContext::Classical);

  // Weight of a known edge through whichever model this oracle implements.
  Weight query_edge_weight(EdgeId id, QueryContext ctx = QueryContext::Classical);

  // Charges `count` quantum oracle applications (one per Grover iteration,
  // independent of superposition width).
  void charge_quantum(std::uint64_t count = 1) noexcept {
    quantum_.fetch_add(count, std::memory_order_relaxed);
  }

  std::uint64_t classical_queries() const noexcept {
    return classical_.load(std::memory_order_relaxed);
  }
  std::uint64_t quantum_queries() const noexcept { return quantum_.load(std::memory_order_relaxed); }

  void reset() noexcept {
    classical_.store(0, std::memory_order_relaxed);
    quantum_.store(0, std::memory_order_relaxed);
  }

 private:
  void charge(QueryContext ctx) noexcept {
    (ctx == QueryContext::Classical ? classical_ : quantum_).fetch_add(1, std::memory_order_relaxed);
  }

  const Graph* graph_;
  OracleModel model_;
  std::atomic<std::uint64_t> classical_{0};
  std::atomic<std::uint64_t> quantum_{0};
};

}  // namespace mstv
