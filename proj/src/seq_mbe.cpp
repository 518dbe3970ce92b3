#include "mbe/seq_mbe.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace mbe {

namespace {

struct DfsContext {
  const Graph* g = nullptr;
  std::size_t min_size = 1;
  const VertexOrder* order = nullptr;
  // When set: prune closures containing vertices below owner (in the active
  // order) and emit only bicliques whose order-minimum equals owner.
  std::optional<VertexId> owner;
  const BicliqueSink* sink = nullptr;
  EnumSummary summary;

  // Γ(X ∪ {v}) given Γ(X); X = ∅ is represented by an empty gamma_x with
  // x_empty set, in which case Γ({v}) = η(v).
  VertexSet gamma_with(std::span<const VertexId> gamma_x, bool x_empty, VertexId v) const {
    auto nbrs = g->neighbors(v);
    if (x_empty) return VertexSet(nbrs.begin(), nbrs.end());
    return set_intersect(gamma_x, nbrs);
  }

  std::size_t gamma_size_with(std::span<const VertexId> gamma_x, bool x_empty,
                              VertexId v) const {
    auto nbrs = g->neighbors(v);
    if (x_empty) return nbrs.size();
    return intersect_size(gamma_x, nbrs);
  }

  bool below_owner(std::span<const VertexId> set) const {
    if (!owner) return false;
    for (VertexId v : set) {
      if (order->less(v, *owner)) return true;
    }
    return false;
  }

  void maybe_emit(const VertexSet& y, const VertexSet& n) {
    if (owner) {
      // Emission belongs to this reducer only if owner is the smallest vertex
      // of the biclique in the active order; requiring it inside Y keeps the
      // two orientations of one biclique from both being emitted.
      if (!set_contains(y, *owner)) return;
      for (VertexId v : n) {
        if (order->less(v, *owner)) return;
      }
    } else {
      // One emission per biclique: the side holding the order-minimum vertex
      // plays Y. The search reaches both closed sides of every maximal
      // biclique, so this keeps exactly one of the two.
      if (order->less(order->min(n), order->min(y))) return;
    }
    Biclique b(y, n);
    summary.account(b);
    (*sink)(b);
  }

  // X (sorted), Γ(X), and the live tail (sorted by id). X is empty only at
  // the root.
  void run(const VertexSet& x, const VertexSet& gamma_x, VertexSet tail) {
    const bool x_empty = x.empty();

    // Drop tail vertices that cannot reach the size threshold.
    VertexSet pruned;
    std::vector<std::size_t> gsize;
    pruned.reserve(tail.size());
    gsize.reserve(tail.size());
    for (VertexId v : tail) {
      std::size_t sz = gamma_size_with(gamma_x, x_empty, v);
      if (sz >= min_size) {
        pruned.push_back(v);
        gsize.push_back(sz);
      }
    }
    if (x.size() + pruned.size() < min_size) return;

    // Ascending |Γ(X ∪ {v})|, ties broken by the active order.
    std::vector<std::size_t> idx(pruned.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      if (gsize[a] != gsize[b]) return gsize[a] < gsize[b];
      return order->less(pruned[a], pruned[b]);
    });

    VertexSet remaining = pruned;
    for (std::size_t i : idx) {
      const VertexId v = pruned[i];
      auto it = std::lower_bound(remaining.begin(), remaining.end(), v);
      remaining.erase(it);
      if (x.size() + 1 + remaining.size() < min_size) continue;

      VertexSet n = gamma_with(gamma_x, x_empty, v);
      VertexSet y = g->common_neighborhood(n);
      ++summary.closures;

      if (below_owner(y)) continue;

      // Expansion path is taken only when the closure added nothing outside
      // the live tail; this is what makes every closed set reachable once.
      VertexSet x_v(x);
      insert_sorted(x_v, v);
      if (!is_subset(set_difference(y, x_v), remaining)) continue;

      if (!is_subset(x_v, y)) {
        throw std::logic_error("biclique search invariant violated: closure shrank");
      }

      if (y.size() >= min_size) maybe_emit(y, n);
      run(y, n, set_difference(remaining, y));
    }
  }
};

EnumSummary run_dfs(const Graph& g, std::size_t min_size, const VertexOrder& order,
                    std::optional<VertexId> owner, const BicliqueSink& sink) {
  if (min_size < 1) throw std::invalid_argument("size threshold must be at least 1");
  DfsContext ctx;
  ctx.g = &g;
  ctx.min_size = min_size;
  ctx.order = &order;
  ctx.owner = owner;
  ctx.sink = &sink;

  VertexSet tail;
  tail.reserve(g.vertex_count());
  for (VertexId v : g.vertices()) {
    if (owner && order.less(v, *owner)) continue;  // tail pre-pruned below the key
    tail.push_back(v);
  }
  ctx.run({}, {}, std::move(tail));
  return ctx.summary;
}

}  // namespace

EnumSummary mbe_dfs(const Graph& g, std::size_t min_size, const BicliqueSink& sink) {
  VertexOrder lex;
  return run_dfs(g, min_size, lex, std::nullopt, sink);
}

EnumSummary cd0_seq(const Cluster& cluster, VertexId key, std::size_t min_size,
                    const BicliqueSink& sink) {
  VertexOrder lex;
  return run_dfs(cluster.subgraph, min_size, lex, key, sink);
}

EnumSummary cdl_seq(const Cluster& cluster, VertexId key, const VertexOrder& order,
                    std::size_t min_size, const BicliqueSink& sink) {
  if (!order.covers(cluster.subgraph.vertices())) {
    throw std::runtime_error("vertex property map does not cover the cluster");
  }
  return run_dfs(cluster.subgraph, min_size, order, key, sink);
}

std::vector<Biclique> brute_force_oracle(const Graph& g, std::size_t min_size) {
  if (min_size < 1) throw std::invalid_argument("size threshold must be at least 1");
  const auto& verts = g.vertices();
  if (verts.size() > 20) {
    throw std::invalid_argument("brute force oracle refuses graphs with more than 20 vertices");
  }
  std::vector<Biclique> out;
  const std::uint32_t limit = 1u << verts.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    VertexSet r;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (mask & (1u << i)) r.push_back(verts[i]);
    }
    VertexSet l = g.common_neighborhood(r);
    if (l.empty()) continue;
    if (g.common_neighborhood(l) != r) continue;
    if (l.size() < min_size || r.size() < min_size) continue;
    out.emplace_back(std::move(l), std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mbe
