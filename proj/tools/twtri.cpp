// twtri: triangle counting along contraction sequences.
//
// Exit codes: 0 ok, 1 I/O failure, 2 parse/usage error, 3 semantic or
// sequence error, 4 internal invariant violation.

#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twtri/bench.hpp"
#include "twtri/counter.hpp"
#include "twtri/generators.hpp"
#include "twtri/graph_io.hpp"
#include "twtri/oracle.hpp"
#include "twtri/seqgen.hpp"
#include "twtri/sequence.hpp"

namespace {

using namespace twtri;

enum Exit { kOk = 0, kIo = 1, kParse = 2, kSemantic = 3, kInvariant = 4 };

CompactSequence read_sequence_file(const std::string& path) { return parse_sequence(read_text_file(path)); }

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") std::cout << text;
  else write_text_file(out_path, text);
}

int cmd_count(const std::string& graph_path, const std::string& seq_path, bool stats, bool checked,
              VertexId check_limit) {
  const EdgeList g = read_graph_file(graph_path);
  const CompactSequence seq = read_sequence_file(seq_path);
  CountOptions options;
  if (checked) {
    options.mode = CountOptions::Mode::Checked;
    options.checked_max_n = check_limit;
  }
  const CountResult r = count_triangles(g, seq, options);
  std::cout << "triangles " << r.triangles << '\n';
  if (stats) {
    const CountCounters& c = r.counters;
    std::cout << "stat steps " << r.steps << '\n'
              << "stat width " << c.width << '\n'
              << "stat contractions " << c.contractions << '\n'
              << "stat aux_updates " << c.aux_updates << '\n'
              << "stat one_neighbor_calls " << c.one_neighbor_calls << '\n'
              << "stat two_neighbor_pair_visits " << c.two_neighbor_pair_visits << '\n'
              << "stat red_wedge_visits " << c.red_wedge_visits << '\n'
              << "stat graph_update_work " << c.graph_update_work << '\n'
              << "stat pair_budget " << c.pair_budget << '\n';
  }
  return kOk;
}

int cmd_width(const std::string& graph_path, const std::string& seq_path) {
  const EdgeList g = read_graph_file(graph_path);
  const CompactSequence seq = read_sequence_file(seq_path);
  const SequenceReport r = replay(g, seq);
  if (!r.valid) {
    std::cerr << "invalid sequence: " << r.message << '\n';
    return kSemantic;
  }
  std::cout << "width " << r.width << '\n';
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& seq_path, const std::optional<std::size_t>& bound) {
  const EdgeList g = read_graph_file(graph_path);
  const CompactSequence seq = read_sequence_file(seq_path);
  const SequenceReport r = bound ? verify_width(g, seq, *bound) : replay(g, seq);
  if (!r.valid) {
    std::cout << "invalid step " << r.failing_step.value_or(0) << " width " << r.width << '\n';
    std::cerr << r.message << '\n';
    return kSemantic;
  }
  std::cout << "valid width " << r.width << '\n';
  return kOk;
}

int cmd_oracle(const std::string& graph_path) {
  const EdgeList g = read_graph_file(graph_path);
  std::cout << "triangles " << oracle::count_naive(oracle::PlainGraph::from_edges(g)) << '\n';
  return kOk;
}

struct GenGraphArgs {
  std::string family;
  FamilyParams params;
  std::uint64_t seed = 0;
  std::string out;
  std::string seq_out;
};

int cmd_gen_graph(const GenGraphArgs& a) {
  const auto family = parse_family(a.family);
  if (!family) {
    std::cerr << "unknown family '" << a.family << "'\n";
    return kParse;
  }
  GeneratedGraph gen;
  try {
    gen = gen_graph(*family, a.params, a.seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  }
  emit(a.out, serialize_graph(gen.graph));
  if (!a.seq_out.empty()) {
    const CompactSequence seq =
        gen.cotree ? gen_twin_first(gen.graph, *gen.cotree) : gen_greedy(gen.graph).sequence;
    write_text_file(a.seq_out, serialize_sequence(seq));
  }
  return kOk;
}

int cmd_gen_seq(const std::string& graph_path, const std::string& strategy, VertexId exact_max_n,
                const std::string& out) {
  const EdgeList g = read_graph_file(graph_path);
  GeneratedSequence gen;
  if (strategy == "exact") {
    gen = gen_exact(g, exact_max_n);
  } else if (strategy == "greedy") {
    gen = gen_greedy(g);
  } else {
    auto seq = gen_twin_elimination(g);
    if (!seq) throw SemanticError("graph is not a cograph; use --strategy greedy");
    gen.sequence = std::move(*seq);
    gen.width = 0;
  }
  emit(out, serialize_sequence(gen.sequence));
  std::cerr << "width " << gen.width << '\n';
  return kOk;
}

struct BenchArgs {
  std::string family = "gnp";
  std::vector<VertexId> sizes;
  std::vector<double> params;
  std::vector<std::uint64_t> seeds;
  std::string source = "auto";
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  const auto family = parse_family(a.family);
  if (!family) {
    std::cerr << "unknown family '" << a.family << "'\n";
    return kParse;
  }
  SweepSpec spec;
  spec.family = *family;
  spec.sizes = a.sizes;
  spec.params = a.params;
  spec.seeds = a.seeds.empty() ? std::vector<std::uint64_t>{default_seed()} : a.seeds;
  spec.source = a.source == "greedy" ? SequenceSource::Greedy : SequenceSource::Auto;
  std::vector<BenchRecord> records;
  try {
    records = run_bench(spec);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  }
  emit(a.out, bench_csv(records));
  for (const BenchRecord& r : records) {
    if (!r.agrees()) {
      std::cerr << "count " << r.triangles << " != oracle " << r.oracle_triangles << " (n=" << r.n
                << ", seed=" << r.seed << ")\n";
      return kInvariant;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle counting along twin-width contraction sequences"};
  app.require_subcommand(1);

  std::string graph_path, seq_path, out;
  bool stats = false, checked = false;
  VertexId check_limit = 64;

  auto* count = app.add_subcommand("count", "Count triangles using a contraction sequence");
  count->add_option("graph", graph_path, "Graph file")->required();
  count->add_option("sequence,--sequence,-s", seq_path, "Sequence file")->required();
  count->add_flag("--stats", stats, "Print counters and witnessed width");
  count->add_flag("--checked", checked, "Evaluate the loop invariant after every contraction");
  count->add_option("--check-limit", check_limit, "Largest n accepted by --checked")->capture_default_str();

  auto* width = app.add_subcommand("width", "Width (max red degree) witnessed by a sequence");
  width->add_option("graph", graph_path, "Graph file")->required();
  width->add_option("sequence,--sequence,-s", seq_path, "Sequence file")->required();

  std::optional<std::size_t> bound;
  auto* verify = app.add_subcommand("verify", "Replay a sequence, optionally against a width bound");
  verify->add_option("graph", graph_path, "Graph file")->required();
  verify->add_option("sequence,--sequence,-s", seq_path, "Sequence file")->required();
  verify->add_option("--width,-d", bound, "Claimed bound on the red degree");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force triangle count");
  oracle_cmd->add_option("graph", graph_path, "Graph file")->required();

  auto* gen = app.add_subcommand("gen", "Generate graphs and sequences");
  gen->require_subcommand(1);
  GenGraphArgs gg;
  gg.seed = default_seed();
  auto* gen_graph_cmd = gen->add_subcommand("graph", "Generate a graph file");
  gen_graph_cmd->add_option("--family,-f", gg.family, "gnp|cograph|complete|path|cycle|grid|star|petersen")
      ->required();
  gen_graph_cmd->add_option("--n,-n", gg.params.n, "Vertex count");
  gen_graph_cmd->add_option("--p,-p", gg.params.p, "Edge probability (gnp)")->capture_default_str();
  gen_graph_cmd->add_option("--join-prob", gg.params.join_prob, "Series-node probability (cograph)")
      ->capture_default_str();
  gen_graph_cmd->add_option("--rows", gg.params.rows, "Grid rows");
  gen_graph_cmd->add_option("--cols", gg.params.cols, "Grid columns");
  gen_graph_cmd->add_option("--seed", gg.seed, "RNG seed (default: $TWTRI_SEED or 1)");
  gen_graph_cmd->add_option("--out,-o", gg.out, "Output file (default stdout)");
  gen_graph_cmd->add_option("--seq-out", gg.seq_out, "Also write the family's natural sequence here");

  std::string strategy = "greedy";
  VertexId exact_max_n = kExactDefaultMaxN;
  auto* gen_seq_cmd = gen->add_subcommand("seq", "Generate a contraction sequence for a graph");
  gen_seq_cmd->add_option("graph", graph_path, "Graph file")->required();
  gen_seq_cmd->add_option("--strategy", strategy, "exact|greedy|twin")
      ->check(CLI::IsMember({"exact", "greedy", "twin"}))
      ->capture_default_str();
  gen_seq_cmd->add_option("--exact-max-n", exact_max_n, "Largest n for the exact search")->capture_default_str();
  gen_seq_cmd->add_option("--out,-o", out, "Output file (default stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Sweep a graph family and write a CSV of counters and timings");
  bench->add_option("--family,-f", ba.family, "Graph family")->capture_default_str();
  bench->add_option("--sizes", ba.sizes, "Comma-separated sizes (grid: side length)")->delimiter(',');
  bench->add_option("--params", ba.params, "Comma-separated p (gnp) or join probability (cograph)")
      ->delimiter(',');
  bench->add_option("--seeds", ba.seeds, "Comma-separated seeds (default: $TWTRI_SEED or 1)")->delimiter(',');
  bench->add_option("--source", ba.source, "auto|greedy")
      ->check(CLI::IsMember({"auto", "greedy"}))
      ->capture_default_str();
  bench->add_option("--out,-o", ba.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*count) return cmd_count(graph_path, seq_path, stats, checked, check_limit);
    if (*width) return cmd_width(graph_path, seq_path);
    if (*verify) return cmd_verify(graph_path, seq_path, bound);
    if (*oracle_cmd) return cmd_oracle(graph_path);
    if (*gen_graph_cmd) return cmd_gen_graph(gg);
    if (*gen_seq_cmd) return cmd_gen_seq(graph_path, strategy, exact_max_n, out);
    if (*bench) return cmd_bench(ba);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSemantic;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
