#include "mbe/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

#include "mbe/cluster.hpp"
#include "mbe/mr/wire.hpp"
#include "mbe/vertex_order.hpp"

namespace mbe {

namespace {

// Round-1 map (edge → both endpoints' lists) and reduce (assemble one sorted
// adjacency record per vertex).
mr::RoundSpec adjacency_round(int reducers) {
  mr::RoundSpec spec;
  spec.name = "adjacency";
  spec.reducers = reducers;
  spec.map_fn = [](const mr::Record& in) {
    auto [u, v] = wire::decode_edge(in.value);
    return std::vector<mr::Record>{{wire::vertex_key(u), wire::vertex_key(v)},
                                   {wire::vertex_key(v), wire::vertex_key(u)}};
  };
  spec.reduce_fn = [](const std::string& key, std::vector<std::string>& values) {
    const VertexId v = wire::decode_vertex(key);
    VertexSet nbrs;
    nbrs.reserve(values.size());
    for (const auto& val : values) nbrs.push_back(wire::decode_vertex(val));
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    return std::vector<mr::Record>{{"", wire::encode_adjacency(v, nbrs)}};
  };
  return spec;
}

// Algorithm-6 fan-out: every adjacency record goes to its owner and to each
// neighbor, so each reducer sees the lists of its whole 1-neighborhood.
std::vector<mr::Record> two_neighborhood_fanout(const mr::Record& in) {
  const auto adj = wire::decode_adjacency(in.value);
  std::vector<mr::Record> out;
  out.reserve(adj.neighbors.size() + 1);
  out.push_back({wire::vertex_key(adj.v), in.value});
  for (VertexId y : adj.neighbors) out.push_back({wire::vertex_key(y), in.value});
  return out;
}

// The subgraph a reducer can see: all edges incident to the key's closed
// 1-neighborhood. It agrees with the true induced 2-neighborhood subgraph on
// every biclique that contains the key, which is all the reducer may emit.
Graph cluster_graph(std::span<const wire::Adjacency> decoded) {
  GraphBuilder b;
  for (const auto& adj : decoded) {
    for (VertexId w : adj.neighbors) b.add_edge(adj.v, w);
  }
  return std::move(b).build();
}

std::vector<wire::Adjacency> decode_all_adjacency(const std::vector<std::string>& values) {
  std::vector<wire::Adjacency> decoded;
  decoded.reserve(values.size());
  for (const auto& val : values) decoded.push_back(wire::decode_adjacency(val));
  return decoded;
}

BicliqueSink record_sink(std::vector<mr::Record>& out) {
  return [&out](const Biclique& b) { out.push_back({"", wire::encode_biclique(b)}); };
}

// Round-2 reduce for the two-round pipelines: build the cluster and run the
// per-algorithm sequential enumerator.
mr::RoundSpec enumerate_round(AlgorithmId algo, std::size_t min_size, int reducers) {
  mr::RoundSpec spec;
  spec.name = "cluster-enumerate";
  spec.reducers = reducers;
  spec.map_fn = two_neighborhood_fanout;
  spec.reduce_fn = [algo, min_size](const std::string& key, std::vector<std::string>& values) {
    const VertexId v = wire::decode_vertex(key);
    auto decoded = decode_all_adjacency(values);
    Cluster cluster;
    cluster.center = v;
    cluster.subgraph = cluster_graph(decoded);

    std::vector<mr::Record> out;
    auto sink = record_sink(out);
    switch (algo) {
      case AlgorithmId::CD0:
        cd0_seq(cluster, v, min_size, sink);
        break;
      case AlgorithmId::CDFS:
        // Unpruned baseline: full enumeration, emit only what this key owns.
        mbe_dfs(cluster.subgraph, min_size, [&](const Biclique& b) {
          if (b.left().front() == v) sink(b);
        });
        break;
      case AlgorithmId::CCONS:
        mbe_consensus(cluster.subgraph, min_size, [&](const Biclique& b) {
          if (b.left().front() == v) sink(b);
        });
        break;
      default:
        throw std::logic_error("not a two-round pipeline");
    }
    return out;
  };
  return spec;
}

// Round-2 reduce for CD1/CD2: re-emit the key's own adjacency record for the
// next round and send the key's order property to every 2-neighbor.
mr::RoundSpec property_round(AlgorithmId algo, int reducers) {
  mr::RoundSpec spec;
  spec.name = "property";
  spec.reducers = reducers;
  spec.map_fn = two_neighborhood_fanout;
  spec.reduce_fn = [algo](const std::string& key, std::vector<std::string>& values) {
    const VertexId v = wire::decode_vertex(key);
    auto decoded = decode_all_adjacency(values);

    VertexSet two_hop;  // η²(v) assembled from the received lists
    const wire::Adjacency* own = nullptr;
    for (const auto& adj : decoded) {
      two_hop.push_back(adj.v);
      two_hop.insert(two_hop.end(), adj.neighbors.begin(), adj.neighbors.end());
      if (adj.v == v) own = &adj;
    }
    std::sort(two_hop.begin(), two_hop.end());
    two_hop.erase(std::unique(two_hop.begin(), two_hop.end()), two_hop.end());
    if (own == nullptr) throw std::runtime_error("missing own adjacency record");

    const std::uint64_t property =
        algo == AlgorithmId::CD1 ? own->neighbors.size() : two_hop.size();

    std::vector<mr::Record> out;
    out.reserve(two_hop.size() + 1);
    out.push_back({"", wire::encode_adjacency(v, own->neighbors)});
    for (VertexId s : two_hop) {
      out.push_back({"", wire::encode_triple({s, v, property})});
    }
    return out;
  };
  return spec;
}

// Round-3: adjacency records fan out as before, property triples are routed
// to their destination; the reducer rebuilds its cluster, checks property
// coverage, and runs the order-aware enumerator.
mr::RoundSpec ordered_enumerate_round(AlgorithmId algo, std::size_t min_size, int reducers) {
  mr::RoundSpec spec;
  spec.name = "cluster-enumerate-ordered";
  spec.reducers = reducers;
  spec.map_fn = [](const mr::Record& in) -> std::vector<mr::Record> {
    if (wire::payload_tag(in.value) == 'A') return two_neighborhood_fanout(in);
    const auto t = wire::decode_triple(in.value);
    return {{wire::vertex_key(t.destination),
             wire::encode_property({t.source, t.property})}};
  };
  spec.reduce_fn = [algo, min_size](const std::string& key, std::vector<std::string>& values) {
    const VertexId v = wire::decode_vertex(key);
    std::vector<wire::Adjacency> decoded;
    std::unordered_map<VertexId, std::uint64_t> props;
    for (const auto& val : values) {
      if (wire::payload_tag(val) == 'A') {
        decoded.push_back(wire::decode_adjacency(val));
      } else {
        const auto p = wire::decode_property(val);
        props[p.source] = p.property;
      }
    }
    Cluster cluster;
    cluster.center = v;
    cluster.subgraph = cluster_graph(decoded);
    cluster.properties = std::move(props);

    auto order = VertexOrder::by_property(
        algo == AlgorithmId::CD1 ? OrderKind::ByDegree : OrderKind::ByTwoNeighborhoodSize,
        cluster.properties);

    std::vector<mr::Record> out;
    auto sink = record_sink(out);
    cdl_seq(cluster, v, order, min_size, sink);
    return out;
  };
  return spec;
}

}  // namespace

std::string to_string(AlgorithmId algo) {
  switch (algo) {
    case AlgorithmId::CDFS: return "cdfs";
    case AlgorithmId::CD0: return "cd0";
    case AlgorithmId::CD1: return "cd1";
    case AlgorithmId::CD2: return "cd2";
    case AlgorithmId::CCONS: return "ccons";
  }
  return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "cdfs") return AlgorithmId::CDFS;
  if (lower == "cd0") return AlgorithmId::CD0;
  if (lower == "cd1") return AlgorithmId::CD1;
  if (lower == "cd2") return AlgorithmId::CD2;
  if (lower == "ccons") return AlgorithmId::CCONS;
  return std::nullopt;
}

std::vector<mr::Record> edge_records(const Graph& g) {
  std::vector<mr::Record> records;
  records.reserve(g.edge_count());
  g.for_each_edge([&](VertexId u, VertexId v) {
    records.push_back({"", wire::encode_edge(u, v)});
  });
  return records;
}

std::vector<mr::RoundSpec> build_pipeline(AlgorithmId algo, std::size_t min_size, int reducers) {
  std::vector<mr::RoundSpec> rounds;
  rounds.push_back(adjacency_round(reducers));
  switch (algo) {
    case AlgorithmId::CDFS:
    case AlgorithmId::CD0:
    case AlgorithmId::CCONS:
      rounds.push_back(enumerate_round(algo, min_size, reducers));
      break;
    case AlgorithmId::CD1:
    case AlgorithmId::CD2:
      rounds.push_back(property_round(algo, reducers));
      rounds.push_back(ordered_enumerate_round(algo, min_size, reducers));
      break;
  }
  return rounds;
}

ParallelResult run_parallel(const Graph& g, AlgorithmId algo, const ParallelOptions& opts) {
  if (opts.min_size < 1) throw std::invalid_argument("size threshold must be at least 1");
  if (opts.reducers < 1) throw std::invalid_argument("reducer count must be positive");

  const auto specs = build_pipeline(algo, opts.min_size, opts.reducers);
  mr::EngineOptions engine_opts;
  engine_opts.spill_dir = opts.spill_dir;

  ParallelResult result;
  if (opts.sink) {
    // Stream each biclique straight out of its reducer; only totals are kept.
    std::atomic<std::uint64_t> count{0};
    std::atomic<std::uint64_t> size{0};
    engine_opts.final_output_sink = [&](int reducer, const mr::Record& rec) {
      Biclique b = wire::decode_biclique(rec.value);
      count.fetch_add(1, std::memory_order_relaxed);
      size.fetch_add(b.edge_weight(), std::memory_order_relaxed);
      opts.sink(reducer, b);
    };
    auto [records, stats] = mr::run_pipeline(edge_records(g), specs, engine_opts);
    result.stats = std::move(stats);
    result.biclique_count = count.load();
    result.output_size = size.load();
  } else {
    auto [records, stats] = mr::run_pipeline(edge_records(g), specs, engine_opts);
    result.stats = std::move(stats);
    result.bicliques.reserve(records.size());
    for (const auto& rec : records) result.bicliques.push_back(wire::decode_biclique(rec.value));
    result.biclique_count = result.bicliques.size();
    for (const auto& b : result.bicliques) result.output_size += b.edge_weight();
  }
  return result;
}

ParallelResult cdfs(const Graph& g, std::size_t s, int r) {
  return run_parallel(g, AlgorithmId::CDFS, {.min_size = s, .reducers = r});
}
ParallelResult cd0(const Graph& g, std::size_t s, int r) {
  return run_parallel(g, AlgorithmId::CD0, {.min_size = s, .reducers = r});
}
ParallelResult cd1(const Graph& g, std::size_t s, int r) {
  return run_parallel(g, AlgorithmId::CD1, {.min_size = s, .reducers = r});
}
ParallelResult cd2(const Graph& g, std::size_t s, int r) {
  return run_parallel(g, AlgorithmId::CD2, {.min_size = s, .reducers = r});
}
ParallelResult ccons(const Graph& g, std::size_t s, int r) {
  return run_parallel(g, AlgorithmId::CCONS, {.min_size = s, .reducers = r});
}

}  // namespace mbe
