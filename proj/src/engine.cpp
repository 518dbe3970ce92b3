#include "mbe/mr/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace mbe::mr {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs body(0..count-1) on up to `threads` workers. Work is handed out
// through an atomic cursor; the first exception wins and is rethrown after
// all workers drain.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  threads = std::max(1u, std::min<unsigned>(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

unsigned pool_width(int reducers) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return std::min<unsigned>(hw, static_cast<unsigned>(reducers));
}

void spill_records(const std::filesystem::path& file, const std::vector<Record>& records) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open spill file " + file.string());
  for (const Record& r : records) {
    const std::uint64_t k = r.key.size(), v = r.value.size();
    out.write(reinterpret_cast<const char*>(&k), sizeof k);
    out.write(r.key.data(), static_cast<std::streamsize>(k));
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
    out.write(r.value.data(), static_cast<std::streamsize>(v));
  }
  if (!out) throw std::runtime_error("short write to spill file " + file.string());
}

std::vector<Record> unspill_records(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open spill file " + file.string());
  std::vector<Record> records;
  for (;;) {
    std::uint64_t k = 0, v = 0;
    if (!in.read(reinterpret_cast<char*>(&k), sizeof k)) break;
    Record r;
    r.key.resize(k);
    in.read(r.key.data(), static_cast<std::streamsize>(k));
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    r.value.resize(v);
    in.read(r.value.data(), static_cast<std::streamsize>(v));
    if (!in) throw std::runtime_error("truncated spill file " + file.string());
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace

std::uint64_t stable_hash(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t JobStats::total_communication_bytes() const {
  std::uint64_t total = 0;
  for (const auto& r : rounds) total += r.communication_bytes();
  return total;
}

SkewStats reducer_skew(const JobStats& stats, std::size_t round) {
  if (round >= stats.rounds.size()) throw std::out_of_range("no such round");
  const auto& times = stats.rounds[round].reducer_ms;
  if (times.empty()) throw std::invalid_argument("round has no reducer timings");
  SkewStats s;
  for (double t : times) s.mean += t;
  s.mean /= static_cast<double>(times.size());
  for (double t : times) s.variance += (t - s.mean) * (t - s.mean);
  s.variance /= static_cast<double>(times.size());
  s.stddev = std::sqrt(s.variance);
  return s;
}

std::pair<std::vector<Record>, RoundStats> run_round(std::vector<Record> input,
                                                     const RoundSpec& spec,
                                                     const EngineOptions& opts,
                                                     bool final_round) {
  if (spec.reducers < 1) throw std::invalid_argument("reducer count must be positive");
  const int r = spec.reducers;
  const unsigned width = pool_width(r);
  const auto round_start = Clock::now();

  RoundStats stats;
  stats.name = spec.name;
  stats.map_input_records = input.size();

  // Map phase: per-input output slots keep the shuffle order independent of
  // scheduling.
  std::vector<std::vector<Record>> map_out(input.size());
  parallel_for(input.size(), width, [&](std::size_t i) {
    try {
      map_out[i] = spec.map_fn(input[i]);
    } catch (const EngineError&) {
      throw;
    } catch (const std::exception& e) {
      throw EngineError("map", input[i].key, e.what());
    }
  });
  input.clear();
  input.shrink_to_fit();

  // Partition: records land in their reducer's bucket in global map order.
  const Partitioner partition =
      opts.partitioner ? opts.partitioner : [](const std::string& key, int reducers) {
        return static_cast<std::size_t>(stable_hash(key) % static_cast<std::uint64_t>(reducers));
      };
  std::vector<std::vector<Record>> buckets(static_cast<std::size_t>(r));
  for (auto& out : map_out) {
    for (Record& rec : out) {
      stats.map_records += 1;
      stats.map_bytes += rec.bytes();
      buckets[partition(rec.key, r)].push_back(std::move(rec));
    }
  }
  map_out.clear();
  map_out.shrink_to_fit();

  // Reduce phase: r logical reducers, each grouping and draining its own
  // bucket sequentially; the pool bounds real parallelism.
  std::vector<std::vector<Record>> reduce_out(static_cast<std::size_t>(r));
  std::vector<std::uint64_t> out_records(static_cast<std::size_t>(r), 0);
  std::vector<std::uint64_t> out_bytes(static_cast<std::size_t>(r), 0);
  stats.reducer_ms.assign(static_cast<std::size_t>(r), 0.0);
  const bool sink_here = final_round && opts.final_output_sink != nullptr;

  parallel_for(static_cast<std::size_t>(r), width, [&](std::size_t j) {
    const auto t0 = Clock::now();
    std::map<std::string, std::vector<std::string>> groups;  // sorted keys
    for (Record& rec : buckets[j]) {
      groups[std::move(rec.key)].push_back(std::move(rec.value));
    }
    buckets[j].clear();
    for (auto& [key, values] : groups) {
      std::vector<Record> out;
      try {
        out = spec.reduce_fn(key, values);
      } catch (const EngineError&) {
        throw;
      } catch (const std::exception& e) {
        throw EngineError("reduce", key, e.what());
      }
      for (Record& rec : out) {
        out_records[j] += 1;
        out_bytes[j] += rec.bytes();
        if (sink_here) {
          opts.final_output_sink(static_cast<int>(j), rec);
        } else {
          reduce_out[j].push_back(std::move(rec));
        }
      }
    }
    stats.reducer_ms[j] = ms_since(t0);
  });

  std::vector<Record> output;
  std::size_t total = 0;
  for (int j = 0; j < r; ++j) {
    stats.reduce_output_records += out_records[j];
    stats.reduce_output_bytes += out_bytes[j];
    total += reduce_out[j].size();
  }
  output.reserve(total);
  for (auto& part : reduce_out) {
    for (Record& rec : part) output.push_back(std::move(rec));
  }
  stats.wall_ms = ms_since(round_start);
  return {std::move(output), std::move(stats)};
}

std::pair<std::vector<Record>, JobStats> run_pipeline(std::vector<Record> input,
                                                      std::span<const RoundSpec> specs,
                                                      const EngineOptions& opts) {
  JobStats job;
  const auto start = Clock::now();
  std::vector<Record> records = std::move(input);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const bool last = i + 1 == specs.size();
    try {
      auto [out, stats] = run_round(std::move(records), specs[i], opts, last);
      records = std::move(out);
      job.rounds.push_back(std::move(stats));
    } catch (EngineError& e) {
      e.set_round(static_cast<int>(i));
      throw;
    }
    if (!last && opts.spill_dir) {
      const auto file = *opts.spill_dir / ("round-" + std::to_string(i) + ".spill");
      spill_records(file, records);
      records.clear();
      records.shrink_to_fit();
      records = unspill_records(file);
      std::filesystem::remove(file);
    }
  }
  job.wall_ms = ms_since(start);
  return {std::move(records), std::move(job)};
}

}  // namespace mbe::mr
