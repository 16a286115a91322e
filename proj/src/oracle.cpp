#include "mstv/oracle.hpp"

#include <string>

#include "mstv/error.hpp"

namespace mstv {

Weight InstrumentedOracle::query_weight_adjacency(VertexId a, VertexId b, QueryContext ctx) {
  const std::size_t n = graph_->vertex_count();
  if (a >= n || b >= n) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex pair (" + std::to_string(a) + ", " +
                                                std::to_string(b) + ") outside the graph");
  }
  charge(ctx);
  auto id = graph_->find_edge(a, b);
  return id ? graph_->edge(*id).w : kInfiniteWeight;
}

EdgeRecord InstrumentedOracle::query_edge(EdgeId i, QueryContext ctx) {
  if (i >= graph_->edge_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "edge index " + std::to_string(i) + " out of range");
  }
  charge(ctx);
  const Edge& e = graph_->edge(i);
  return {e.u, e.v, e.w};
}

Weight InstrumentedOracle::query_edge_weight(EdgeId id, QueryContext ctx) {
  if (model_ == OracleModel::EdgeList) return query_edge(id, ctx).w;
  const Edge& e = graph_->edge(id);
  return query_weight_adjacency(e.u, e.v, ctx);
}

}  // namespace mstv
