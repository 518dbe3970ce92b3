#include "mbe/vertex_order.hpp"

#include <stdexcept>

namespace mbe {

VertexOrder VertexOrder::by_property(OrderKind kind,
                                     std::unordered_map<VertexId, std::uint64_t> props) {
  VertexOrder o;
  o.kind_ = kind;
  o.props_ = std::move(props);
  return o;
}

VertexOrder VertexOrder::by_degree(const Graph& g) {
  std::unordered_map<VertexId, std::uint64_t> p;
  p.reserve(g.vertex_count());
  for (VertexId v : g.vertices()) p.emplace(v, g.degree(v));
  return by_property(OrderKind::ByDegree, std::move(p));
}

VertexOrder VertexOrder::by_two_neighborhood_size(const Graph& g) {
  std::unordered_map<VertexId, std::uint64_t> p;
  p.reserve(g.vertex_count());
  for (VertexId v : g.vertices()) p.emplace(v, g.two_neighborhood(v).size());
  return by_property(OrderKind::ByTwoNeighborhoodSize, std::move(p));
}

VertexId VertexOrder::min(std::span<const VertexId> s) const {
  if (s.empty()) throw std::invalid_argument("order minimum of an empty set");
  VertexId best = s[0];
  for (VertexId v : s.subspan(1)) {
    if (less(v, best)) best = v;
  }
  return best;
}

std::uint64_t VertexOrder::property(VertexId v) const {
  auto it = props_.find(v);
  if (it == props_.end()) {
    throw std::runtime_error("missing vertex property for vertex " + std::to_string(v));
  }
  return it->second;
}

bool VertexOrder::covers(std::span<const VertexId> s) const {
  if (kind_ == OrderKind::Lexicographic) return true;
  for (VertexId v : s) {
    if (props_.find(v) == props_.end()) return false;
  }
  return true;
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lexicographic: return "lexicographic";
    case OrderKind::ByDegree: return "degree";
    case OrderKind::ByTwoNeighborhoodSize: return "two-neighborhood-size";
  }
  return "?";
}

}  // namespace mbe
