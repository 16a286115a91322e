#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mstv/boruvka.hpp"
#include "mstv/graph.hpp"
#include "mstv/grover.hpp"
#include "mstv/oracle.hpp"

namespace mstv {

enum class VerifyMode { Adjacency, EdgeList, ClassicalOnly };

std::string_view to_string(VerifyMode mode) noexcept;

struct Witness {
  EdgeId violating_edge_id = kNoEdge;  // non-tree edge swapped in
  EdgeId replaced_edge_id = kNoEdge;   // heaviest edge on its tree path, swapped out

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  enum class Status { Minimal, NotMinimal };

  Status status = Status::Minimal;
  std::optional<Witness> witness;
  std::optional<SpanningTree> improved_tree;
  Weight weight_delta = 0.0;  // improved weight - original weight, < 0 when set

  bool minimal() const noexcept { return status == Status::Minimal; }
};

struct QueryReport {
  std::uint64_t classical_weight_queries = 0;
  std::uint64_t quantum_oracle_applications = 0;  // Grover iterations plus checks
  std::uint64_t grover_iterations = 0;
  std::uint64_t schedule_checks = 0;
  VerifyMode mode = VerifyMode::ClassicalOnly;
  bool analytic_mode = false;
  std::uint64_t work_ops = 0;

  double delta = 0.0;  // completeness error target (quantum modes)
  std::size_t restarts = 0;
  std::size_t search_logical_size = 0;
  std::size_t search_domain_size = 0;
  // restarts * per-schedule cutoff + checks: the bound on quantum applications.
  std::uint64_t quantum_budget = 0;
  // (classical + quantum queries) / n
  double oracle_constant = 0.0;
};

struct VerifyResult {
  Verdict verdict;
  QueryReport report;
};

struct QuantumConfig {
  double delta = 0.01;
  double growth = 1.2;
  double cutoff_factor = 9.0;
  std::size_t statevector_cap = std::size_t{1} << 22;
};

// ceil(log2(1/delta)) schedules. Throws Error{InvalidArgument} unless
// 0 < delta < 1.
std::size_t restarts_for(double delta);

// Whether non-tree edge e is lighter than the heaviest edge on its tree path.
// Queries w(e) once through `o` (charged to `ctx`); the path maximum comes
// from `b` without queries. Tree edges return false without a query.
bool is_violating(const Graph& g, const SpanningTree& t, const BoruvkaTree& b, EdgeId e,
                  InstrumentedOracle& o, QueryContext ctx = QueryContext::Classical,
                  std::uint64_t* work = nullptr);

// Builds the Borůvka tree and scans every non-tree edge. The witness is the
// (w, id)-least violating edge.
VerifyResult classical_verify(const Graph& g, const SpanningTree& t, InstrumentedOracle& o);

// Builds the Borůvka tree classically, then searches candidate edges
// (EdgeList) or unordered vertex pairs (Adjacency) with BBHT. The oracle's
// model must match the mode; Adjacency mode rejects graphs with parallel
// edges. Reported witnesses are certified against a direct path walk.
VerifyResult quantum_verify(const Graph& g, const SpanningTree& t, InstrumentedOracle& o,
                            VerifyMode mode, std::uint64_t rng_seed,
                            const QuantumConfig& config = {});

// Throws Error{InvalidWitness} unless the witness is a genuine improving swap.
void certify_witness(const Graph& g, const SpanningTree& t, const Witness& w);

// T - replaced + violating. Throws Error{InvalidWitness} when certification fails.
SpanningTree improve(const Graph& g, const SpanningTree& t, const Witness& w);

SpanningTree kruskal_mst(const Graph& g);

// Unordered pair index p in [0, n(n-1)/2) <-> (a, b), a < b, lexicographic.
std::pair<VertexId, VertexId> unrank_pair(std::size_t n, std::size_t index);
std::size_t rank_pair(std::size_t n, VertexId a, VertexId b);

}  // namespace mstv
