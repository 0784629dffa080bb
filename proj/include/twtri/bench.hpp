#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twtri/counter.hpp"
#include "twtri/generators.hpp"

namespace twtri {

enum class SequenceSource {
  Auto,    // cotree twin sequence when the family has one, greedy otherwise
  Greedy,  // always greedy
};

// Cartesian sweep: every size x every parameter x every seed.
struct SweepSpec {
  Family family = Family::Gnp;
  std::vector<VertexId> sizes;
  std::vector<double> params;  // gnp: edge probability, cograph: join probability; ignored elsewhere
  std::vector<std::uint64_t> seeds;
  SequenceSource source = SequenceSource::Auto;
};

struct BenchRecord {
  std::string family;
  VertexId n = 0;
  Count m = 0;
  double param = 0.0;
  std::uint64_t seed = 0;
  std::size_t width = 0;
  double wall_time_count = 0.0;   // seconds
  double wall_time_oracle = 0.0;  // seconds
  Count triangles = 0;
  Count oracle_triangles = 0;
  CountCounters counters;

  bool agrees() const { return triangles == oracle_triangles; }
};

// Runs every instance of the sweep; instances may run concurrently, records
// come back in sweep order. Sizes are ignored for petersen; for grid a size s
// means an s x s grid.
std::vector<BenchRecord> run_bench(const SweepSpec& spec);

std::string bench_csv_header();
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace twtri
