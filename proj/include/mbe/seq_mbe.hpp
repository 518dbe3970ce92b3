#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mbe/cluster.hpp"
#include "mbe/graph.hpp"
#include "mbe/vertex_order.hpp"

namespace mbe {

/// Consumer for enumerated bicliques. Streams one biclique at a time so the
/// caller never has to hold the full result set; must be safe for the
/// invoking worker only.
using BicliqueSink = std::function<void(const Biclique&)>;

struct EnumSummary {
  std::uint64_t bicliques = 0;   // emitted through the sink
  std::uint64_t output_size = 0; // Σ |L|·|R| over emissions
  std::uint64_t closures = 0;    // ⟨Y,N⟩ pairs materialized during the search

  void account(const Biclique& b) {
    ++bicliques;
    output_size += b.edge_weight();
  }
};

/// Recursive depth-first enumeration of all maximal bicliques of g whose
/// sides both have at least min_size vertices. Each biclique reaches the sink
/// exactly once, in canonical form. min_size must be >= 1.
EnumSummary mbe_dfs(const Graph& g, std::size_t min_size, const BicliqueSink& sink);

/// Reducer-side pruned DFS: emits exactly those maximal bicliques of
/// cluster.subgraph whose smallest vertex is key. The tail never contains
/// vertices below key and search paths whose closure dips below key are
/// abandoned.
EnumSummary cd0_seq(const Cluster& cluster, VertexId key, std::size_t min_size,
                    const BicliqueSink& sink);

/// cd0_seq with "smallest" evaluated in an arbitrary total order. With the
/// lexicographic order this reproduces cd0_seq exactly. Every vertex of the
/// cluster must be covered by the order's property map.
EnumSummary cdl_seq(const Cluster& cluster, VertexId key, const VertexOrder& order,
                    std::size_t min_size, const BicliqueSink& sink);

/// Iterative consensus enumeration: star-extension seeds, four-way crossing
/// against the seeds, closure extension, dedup, until a fixpoint; then the
/// size filter is applied.
EnumSummary mbe_consensus(const Graph& g, std::size_t min_size, const BicliqueSink& sink);

/// Independent oracle: checks mutual closure L = Γ(R), R = Γ(L) over every
/// non-empty subset. Refuses graphs with more than 20 vertices. Returns the
/// canonical biclique set, sorted.
std::vector<Biclique> brute_force_oracle(const Graph& g, std::size_t min_size);

}  // namespace mbe
