#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mbe/graph.hpp"
#include "mbe/mr/engine.hpp"
#include "mbe/seq_mbe.hpp"

namespace mbe {

/// The clustered pipeline variants. CDFS is the unpruned baseline, CD0 adds
/// ownership pruning, CD1/CD2 add load balancing by degree / 2-neighborhood
/// size, CCONS runs the consensus enumerator inside each reducer.
enum class AlgorithmId { CDFS, CD0, CD1, CD2, CCONS };

std::string to_string(AlgorithmId algo);
std::optional<AlgorithmId> parse_algorithm(std::string_view name);

struct ParallelOptions {
  std::size_t min_size = 1;  // s
  int reducers = 1;          // r
  std::optional<std::filesystem::path> spill_dir;

  /// Streams bicliques as they leave their reducer. When set, the result
  /// carries only the count/output-size summary.
  std::function<void(int reducer, const Biclique&)> sink;
};

struct ParallelResult {
  std::vector<Biclique> bicliques;  // empty when a sink was supplied
  std::uint64_t biclique_count = 0;
  std::uint64_t output_size = 0;  // Σ |L|·|R|
  mr::JobStats stats;
};

/// Runs the selected multi-round pipeline over the local engine.
ParallelResult run_parallel(const Graph& g, AlgorithmId algo, const ParallelOptions& opts = {});

ParallelResult cdfs(const Graph& g, std::size_t s, int r);
ParallelResult cd0(const Graph& g, std::size_t s, int r);
ParallelResult cd1(const Graph& g, std::size_t s, int r);
ParallelResult cd2(const Graph& g, std::size_t s, int r);
ParallelResult ccons(const Graph& g, std::size_t s, int r);

/// The round specs behind run_parallel, exposed for tests that poke at the
/// engine directly.
std::vector<mr::RoundSpec> build_pipeline(AlgorithmId algo, std::size_t min_size, int reducers);

/// Round-1 input: one record per undirected edge.
std::vector<mr::Record> edge_records(const Graph& g);

}  // namespace mbe
