#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbe::mr {

/// One key-value pair. An empty key carries no grouping intent ("direct
/// output" from a reducer); the engine treats it like any other key value.
/// Both fields are opaque bytes and round-trip losslessly.
struct Record {
  std::string key;
  std::string value;

  std::size_t bytes() const { return key.size() + value.size(); }
  friend bool operator==(const Record&, const Record&) = default;
  friend bool operator<(const Record& a, const Record& b) {
    return a.key != b.key ? a.key < b.key : a.value < b.value;
  }
};

using MapFn = std::function<std::vector<Record>(const Record&)>;
using ReduceFn =
    std::function<std::vector<Record>(const std::string& key, std::vector<std::string>& values)>;

/// One map-shuffle-reduce stage. The reduce function for a key sees every
/// value emitted for that key across all mappers, in a deterministic order.
struct RoundSpec {
  std::string name;
  MapFn map_fn;
  ReduceFn reduce_fn;
  int reducers = 1;
};

struct RoundStats {
  std::string name;
  std::uint64_t map_input_records = 0;
  std::uint64_t map_records = 0;  // emitted by all mappers
  std::uint64_t map_bytes = 0;
  std::uint64_t reduce_output_records = 0;
  std::uint64_t reduce_output_bytes = 0;
  std::vector<double> reducer_ms;  // wall time of each logical reducer's batch
  double wall_ms = 0;

  /// Bytes emitted by mappers plus bytes emitted by reducers for this round.
  std::uint64_t communication_bytes() const { return map_bytes + reduce_output_bytes; }
};

struct JobStats {
  std::vector<RoundStats> rounds;
  double wall_ms = 0;

  std::uint64_t total_communication_bytes() const;
};

struct SkewStats {
  double mean = 0;
  double variance = 0;
  double stddev = 0;
};

/// Population statistics over the per-reducer wall times of one round.
SkewStats reducer_skew(const JobStats& stats, std::size_t round);

class EngineError : public std::runtime_error {
 public:
  EngineError(std::string phase, std::string key, const std::string& what)
      : std::runtime_error("mapreduce " + phase + " failed for key '" + key + "': " + what),
        phase_(std::move(phase)),
        key_(std::move(key)) {}

  const std::string& phase() const { return phase_; }
  const std::string& key() const { return key_; }
  int round() const { return round_; }
  void set_round(int r) { round_ = r; }

 private:
  std::string phase_;
  std::string key_;
  int round_ = -1;
};

/// Hadoop-style default partitioner: stable 64-bit hash of the key bytes,
/// modulo the reducer count. Overridable per run for skew experiments.
std::uint64_t stable_hash(std::string_view bytes);
using Partitioner = std::function<std::size_t(const std::string& key, int reducers)>;

struct EngineOptions {
  /// Serialize round outputs through files between rounds instead of keeping
  /// them in memory.
  std::optional<std::filesystem::path> spill_dir;

  /// When set, the final round's reduce outputs stream here (indexed by the
  /// logical reducer that produced them) instead of being returned. They are
  /// still counted in the round stats.
  std::function<void(int reducer, const Record&)> final_output_sink;

  Partitioner partitioner;  // defaults to stable_hash(key) % reducers
};

std::pair<std::vector<Record>, RoundStats> run_round(std::vector<Record> input,
                                                     const RoundSpec& spec,
                                                     const EngineOptions& opts = {},
                                                     bool final_round = true);

std::pair<std::vector<Record>, JobStats> run_pipeline(std::vector<Record> input,
                                                      std::span<const RoundSpec> specs,
                                                      const EngineOptions& opts = {});

}  // namespace mbe::mr
