#include "twtri/bench.hpp"

#include <chrono>
#include <cstdio>
#include <exception>

#include "twtri/oracle.hpp"
#include "twtri/seqgen.hpp"

namespace twtri {

namespace {

struct Instance {
  VertexId size;
  double param;
  std::uint64_t seed;
};

BenchRecord run_instance(const SweepSpec& spec, const Instance& inst) {
  FamilyParams params;
  params.n = inst.size;
  params.rows = params.cols = inst.size;
  if (spec.family == Family::Gnp) params.p = inst.param;
  if (spec.family == Family::Cograph) params.join_prob = inst.param;
  const GeneratedGraph gen = gen_graph(spec.family, params, inst.seed);

  CompactSequence seq;
  if (spec.source == SequenceSource::Auto && gen.cotree) seq = gen_twin_first(gen.graph, *gen.cotree);
  else seq = gen_greedy(gen.graph, GreedyOptions{.parallel = false}).sequence;

  using clock = std::chrono::steady_clock;
  BenchRecord r;
  r.family = to_string(spec.family);
  r.n = gen.graph.n;
  r.param = inst.param;
  r.seed = inst.seed;

  const auto t0 = clock::now();
  const CountResult counted = count_triangles(gen.graph, seq);
  const auto t1 = clock::now();
  const oracle::PlainGraph plain = oracle::PlainGraph::from_edges(gen.graph);
  r.oracle_triangles = oracle::count_naive_serial(plain);
  const auto t2 = clock::now();

  r.m = plain.edge_count();
  r.triangles = counted.triangles;
  r.counters = counted.counters;
  r.width = counted.counters.width;
  r.wall_time_count = std::chrono::duration<double>(t1 - t0).count();
  r.wall_time_oracle = std::chrono::duration<double>(t2 - t1).count();
  return r;
}

}  // namespace

std::vector<BenchRecord> run_bench(const SweepSpec& spec) {
  std::vector<Instance> instances;
  const std::vector<double> params = spec.params.empty() ? std::vector<double>{0.5} : spec.params;
  const std::vector<VertexId> sizes =
      spec.family == Family::Petersen && !spec.sizes.empty() ? std::vector<VertexId>{10} : spec.sizes;
  for (VertexId size : sizes)
    for (double p : params)
      for (std::uint64_t seed : spec.seeds) instances.push_back({size, p, seed});

  std::vector<BenchRecord> records(instances.size());
  // Exceptions cannot cross the parallel region; the first one in sweep
  // order is rethrown afterwards.
  std::vector<std::exception_ptr> errors(instances.size());
  const long long count = static_cast<long long>(instances.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      records[i] = run_instance(spec, instances[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

std::string bench_csv_header() {
  return "family,n,m,param,seed,width,wall_time_count,wall_time_oracle,triangles,oracle_triangles,"
         "contractions,aux_updates,one_neighbor_calls,two_neighbor_pair_visits,red_wedge_visits,"
         "graph_update_work,pair_budget\n";
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::string out = bench_csv_header();
  char buf[512];
  for (const BenchRecord& r : records) {
    const CountCounters& c = r.counters;
    std::snprintf(buf, sizeof buf, "%s,%u,%llu,%g,%llu,%zu,%.6f,%.6f,%llu,%llu,%llu,%llu,%llu,%llu,%llu,%llu,%llu\n",
                  r.family.c_str(), r.n, static_cast<unsigned long long>(r.m), r.param,
                  static_cast<unsigned long long>(r.seed), r.width, r.wall_time_count, r.wall_time_oracle,
                  static_cast<unsigned long long>(r.triangles), static_cast<unsigned long long>(r.oracle_triangles),
                  static_cast<unsigned long long>(c.contractions), static_cast<unsigned long long>(c.aux_updates),
                  static_cast<unsigned long long>(c.one_neighbor_calls),
                  static_cast<unsigned long long>(c.two_neighbor_pair_visits),
                  static_cast<unsigned long long>(c.red_wedge_visits),
                  static_cast<unsigned long long>(c.graph_update_work),
                  static_cast<unsigned long long>(c.pair_budget));
    out += buf;
  }
  return out;
}

}  // namespace twtri
