#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mbe {

// Vertex identifiers come from a totally ordered set; integer comparison is
// the baseline ("lexicographic") order used everywhere unless a VertexOrder
// overrides it.
using VertexId = std::uint64_t;

// Sorted vector of unique ids. All set algebra below assumes this invariant.
using VertexSet = std::vector<VertexId>;

VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b);
VertexSet set_intersect(std::span<const VertexId> a, std::span<const VertexId> b);
std::size_t intersect_size(std::span<const VertexId> a, std::span<const VertexId> b);
VertexSet set_difference(std::span<const VertexId> a, std::span<const VertexId> b);
bool set_contains(std::span<const VertexId> s, VertexId v);
bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b);
void insert_sorted(VertexSet& s, VertexId v);

/// Immutable undirected simple graph over sorted adjacency lists.
/// Symmetric, loop-free, duplicate-free by construction; ids need not be
/// contiguous. Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_; }
  const VertexSet& vertices() const { return verts_; }

  bool has_vertex(VertexId v) const { return index_.count(v) != 0; }

  /// η(v), sorted. Throws on unknown vertex.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;

  /// η²(v): every vertex reachable from v in at most two hops. Includes v
  /// itself whenever deg(v) >= 1 (v is reachable back through any neighbor).
  VertexSet two_neighborhood(VertexId v) const;

  /// Γ(U) = ∩_{u∈U} η(u). U must be non-empty (Γ(∅) is rejected).
  /// Result is disjoint from U since the graph has no self-loops.
  VertexSet common_neighborhood(std::span<const VertexId> u) const;

  /// Subgraph on S containing exactly the parent edges inside S.
  Graph induced_subgraph(std::span<const VertexId> s) const;

  /// Visits each undirected edge once, with u < v.
  template <class F>
  void for_each_edge(F&& fn) const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      const VertexId u = verts_[i];
      for (VertexId w : adj_[i]) {
        if (w > u) fn(u, w);
      }
    }
  }

 private:
  std::size_t index_of(VertexId v) const;

  VertexSet verts_;                         // sorted
  std::vector<std::vector<VertexId>> adj_;  // parallel to verts_, each sorted
  std::size_t edges_ = 0;
  std::unordered_map<VertexId, std::size_t> index_;

  friend class GraphBuilder;
};

/// Collects edges/vertices, then builds a Graph: self-loops and duplicates
/// are dropped, reverse edges added to enforce symmetry.
class GraphBuilder {
 public:
  void add_vertex(VertexId v) { extra_verts_.push_back(v); }
  void add_edge(VertexId u, VertexId v);
  Graph build() &&;

 private:
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<VertexId> extra_verts_;
};

/// Canonical unordered pair of non-empty disjoint vertex sets: the side
/// holding the globally smallest vertex is stored as left(), so ⟨L,R⟩ and
/// ⟨R,L⟩ compare and hash as one value. edge_weight() = |L|·|R|.
class Biclique {
 public:
  Biclique(VertexSet a, VertexSet b);

  const VertexSet& left() const { return left_; }
  const VertexSet& right() const { return right_; }
  std::uint64_t edge_weight() const {
    return static_cast<std::uint64_t>(left_.size()) * right_.size();
  }

  friend bool operator==(const Biclique& a, const Biclique& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }
  friend bool operator<(const Biclique& a, const Biclique& b) {
    return a.left_ != b.left_ ? a.left_ < b.left_ : a.right_ < b.right_;
  }

  struct Hash {
    std::size_t operator()(const Biclique& b) const;
  };

 private:
  VertexSet left_;
  VertexSet right_;
};

}  // namespace mbe
