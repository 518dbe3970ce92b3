#include "mbe/graph.hpp"

#include <algorithm>

namespace mbe {

VertexSet set_union(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersect(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersect_size(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

VertexSet set_difference(std::span<const VertexId> a, std::span<const VertexId> b) {
  VertexSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(std::span<const VertexId> s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void insert_sorted(VertexSet& s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

std::size_t Graph::index_of(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown vertex " + std::to_string(v));
  }
  return it->second;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return adj_[index_of(v)];
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

VertexSet Graph::two_neighborhood(VertexId v) const {
  auto nbrs = neighbors(v);
  if (nbrs.empty()) return {};
  VertexSet out(nbrs.begin(), nbrs.end());
  out.push_back(v);  // reachable back through any neighbor
  for (VertexId u : nbrs) {
    auto nn = neighbors(u);
    out.insert(out.end(), nn.begin(), nn.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet Graph::common_neighborhood(std::span<const VertexId> u) const {
  if (u.empty()) {
    throw std::invalid_argument("common neighborhood of an empty vertex set is undefined");
  }
  // Intersect starting from the smallest adjacency list; bail out early on ∅.
  std::size_t start = 0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (degree(u[i]) < degree(u[start])) start = i;
  }
  auto first = neighbors(u[start]);
  VertexSet out(first.begin(), first.end());
  for (std::size_t i = 0; i < u.size() && !out.empty(); ++i) {
    if (i == start) continue;
    out = set_intersect(out, neighbors(u[i]));
  }
  return out;
}

Graph Graph::induced_subgraph(std::span<const VertexId> s) const {
  GraphBuilder b;
  VertexSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted) {
    b.add_vertex(v);
    for (VertexId w : neighbors(v)) {
      if (w > v && set_contains(sorted, w)) b.add_edge(v, w);
    }
  }
  return std::move(b).build();
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u == v) {
    extra_verts_.push_back(u);  // self-loop dropped, vertex kept
    return;
  }
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

Graph GraphBuilder::build() && {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  Graph g;
  g.verts_ = extra_verts_;
  for (const auto& [u, v] : edges_) {
    g.verts_.push_back(u);
    g.verts_.push_back(v);
  }
  std::sort(g.verts_.begin(), g.verts_.end());
  g.verts_.erase(std::unique(g.verts_.begin(), g.verts_.end()), g.verts_.end());

  g.index_.reserve(g.verts_.size());
  for (std::size_t i = 0; i < g.verts_.size(); ++i) g.index_.emplace(g.verts_[i], i);

  g.adj_.resize(g.verts_.size());
  for (const auto& [u, v] : edges_) {
    g.adj_[g.index_.at(u)].push_back(v);
    g.adj_[g.index_.at(v)].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  g.edges_ = edges_.size();
  return g;
}

Biclique::Biclique(VertexSet a, VertexSet b) : left_(std::move(a)), right_(std::move(b)) {
  std::sort(left_.begin(), left_.end());
  std::sort(right_.begin(), right_.end());
  if (left_.empty() || right_.empty()) {
    throw std::invalid_argument("biclique sides must be non-empty");
  }
  if (!set_intersect(left_, right_).empty()) {
    throw std::invalid_argument("biclique sides must be disjoint");
  }
  if (right_.front() < left_.front()) std::swap(left_, right_);
}

std::size_t Biclique::Hash::operator()(const Biclique& b) const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  };
  mix(b.left().size());
  for (VertexId v : b.left()) mix(v);
  mix(~std::uint64_t{0});
  for (VertexId v : b.right()) mix(v);
  return static_cast<std::size_t>(h);
}

}  // namespace mbe
