#include <optional>
#include <unordered_set>

#include "mbe/seq_mbe.hpp"

namespace mbe {

namespace {

using BicliqueSet = std::unordered_set<Biclique, Biclique::Hash>;

// ⟨Γ(Γ(S)), Γ(S)⟩ for one side S of a candidate; empty result when S has no
// common neighbor.
std::optional<Biclique> extend_side(const Graph& g, const VertexSet& side) {
  VertexSet gamma = g.common_neighborhood(side);
  if (gamma.empty()) return std::nullopt;
  VertexSet closure = g.common_neighborhood(gamma);
  return Biclique(std::move(closure), std::move(gamma));
}

}  // namespace

EnumSummary mbe_consensus(const Graph& g, std::size_t min_size, const BicliqueSink& sink) {
  if (min_size < 1) throw std::invalid_argument("size threshold must be at least 1");
  EnumSummary summary;

  // Seeds: both closure extensions of every star ⟨{v}, η(v)⟩.
  BicliqueSet output;
  std::vector<Biclique> seeds;
  for (VertexId v : g.vertices()) {
    auto nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    VertexSet star_center{v};
    VertexSet star_leaves(nbrs.begin(), nbrs.end());
    for (const auto& side : {star_center, star_leaves}) {
      auto m = extend_side(g, side);
      ++summary.closures;
      if (m && output.insert(*m).second) seeds.push_back(*m);
    }
  }

  // Cross the previous round against the seeds through the four set
  // combinations, extend each valid candidate, and keep iterating until a
  // round adds nothing new.
  std::vector<Biclique> prev(seeds);
  while (!prev.empty()) {
    std::vector<Biclique> fresh;
    for (const Biclique& b1 : prev) {
      for (const Biclique& b2 : seeds) {
        const VertexSet& x1 = b1.left();
        const VertexSet& y1 = b1.right();
        const VertexSet& x2 = b2.left();
        const VertexSet& y2 = b2.right();
        const std::pair<VertexSet, VertexSet> candidates[4] = {
            {set_union(x1, x2), set_intersect(y1, y2)},
            {set_union(x1, y2), set_intersect(y1, x2)},
            {set_union(y1, x2), set_intersect(x1, y2)},
            {set_union(y1, y2), set_intersect(x1, x2)},
        };
        for (const auto& [a, b] : candidates) {
          if (a.empty() || b.empty()) continue;
          if (!set_intersect(a, b).empty()) continue;  // sides must stay disjoint
          for (const auto& side : {a, b}) {
            auto m = extend_side(g, side);
            ++summary.closures;
            if (m && output.insert(*m).second) fresh.push_back(*m);
          }
        }
      }
    }
    prev = std::move(fresh);
  }

  for (const Biclique& b : output) {
    if (b.left().size() >= min_size && b.right().size() >= min_size) {
      summary.account(b);
      sink(b);
    }
  }
  return summary;
}

}  // namespace mbe
