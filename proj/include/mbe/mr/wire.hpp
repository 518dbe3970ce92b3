#pragma once

#include <string>
#include <string_view>

#include "mbe/graph.hpp"

namespace mbe::wire {

// Text payloads moved between rounds. Every format round-trips losslessly:
//   edge        "<u> <v>"                   (pipeline input records)
//   adjacency   "A <v> <n1> ... <nk>"
//   triple      "T <dest> <src> <prop>"     (vertex property routed via map)
//   property    "P <src> <prop>"            (triple after round-3 routing)
//   biclique    "B <l1> <l2> ... | <r1> ..."

struct Adjacency {
  VertexId v = 0;
  VertexSet neighbors;
};

struct PropertyTriple {
  VertexId destination = 0;
  VertexId source = 0;
  std::uint64_t property = 0;
};

struct PropertyValue {
  VertexId source = 0;
  std::uint64_t property = 0;
};

std::string encode_edge(VertexId u, VertexId v);
std::pair<VertexId, VertexId> decode_edge(std::string_view payload);

std::string encode_adjacency(VertexId v, std::span<const VertexId> neighbors);
Adjacency decode_adjacency(std::string_view payload);

std::string encode_triple(const PropertyTriple& t);
PropertyTriple decode_triple(std::string_view payload);

std::string encode_property(const PropertyValue& p);
PropertyValue decode_property(std::string_view payload);

std::string encode_biclique(const Biclique& b);
Biclique decode_biclique(std::string_view payload);

char payload_tag(std::string_view payload);

std::string vertex_key(VertexId v);
VertexId decode_vertex(std::string_view token);

}  // namespace mbe::wire
