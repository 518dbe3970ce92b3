#pragma once

#include <unordered_map>

#include "mbe/graph.hpp"

namespace mbe {

/// The unit of per-reducer work: the subgraph covering the 2-neighborhood of
/// one center vertex, plus the per-vertex properties needed by the
/// load-balanced orderings (empty when unused).
struct Cluster {
  VertexId center = 0;
  Graph subgraph;
  std::unordered_map<VertexId, std::uint64_t> properties;

  /// Full induced subgraph on η²(center) of g.
  static Cluster around(const Graph& g, VertexId center);
};

}  // namespace mbe
