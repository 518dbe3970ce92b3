#pragma once

#include <span>
#include <string>
#include <unordered_map>

#include "mbe/graph.hpp"

namespace mbe {

enum class OrderKind { Lexicographic, ByDegree, ByTwoNeighborhoodSize };

/// Total order on vertices: compare (property[v], v) ascending, or the id
/// alone for the lexicographic baseline. Equal inputs always produce the
/// same order.
class VertexOrder {
 public:
  VertexOrder() = default;  // lexicographic

  static VertexOrder lexicographic() { return {}; }
  static VertexOrder by_property(OrderKind kind,
                                 std::unordered_map<VertexId, std::uint64_t> props);
  static VertexOrder by_degree(const Graph& g);
  static VertexOrder by_two_neighborhood_size(const Graph& g);

  OrderKind kind() const { return kind_; }
  bool is_lexicographic() const { return kind_ == OrderKind::Lexicographic; }

  bool less(VertexId a, VertexId b) const {
    if (kind_ == OrderKind::Lexicographic) return a < b;
    const std::uint64_t pa = property(a), pb = property(b);
    return pa != pb ? pa < pb : a < b;
  }

  VertexId min(std::span<const VertexId> s) const;

  /// Property value backing the order; throws if a vertex is missing one
  /// (which signals broken property plumbing upstream).
  std::uint64_t property(VertexId v) const;

  bool covers(std::span<const VertexId> s) const;

 private:
  OrderKind kind_ = OrderKind::Lexicographic;
  std::unordered_map<VertexId, std::uint64_t> props_;
};

std::string to_string(OrderKind kind);

}  // namespace mbe
