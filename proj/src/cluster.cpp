#include "mbe/cluster.hpp"

namespace mbe {

Cluster Cluster::around(const Graph& g, VertexId center) {
  Cluster c;
  c.center = center;
  c.subgraph = g.induced_subgraph(g.two_neighborhood(center));
  return c;
}

}  // namespace mbe
