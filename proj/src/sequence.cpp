#include "twtri/sequence.hpp"

#include <algorithm>

#include "twtri/graph_io.hpp"

namespace twtri {

CompactSequence parse_sequence(std::string_view text) {
  CompactSequence seq;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tok = detail::split_tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "s") {
      std::uint64_t n = 0;
      if (have_header) throw ParseError("duplicate header", line_no);
      if (tok.size() != 2 || !detail::parse_uint(tok[1], n)) throw ParseError("expected 's <n>'", line_no);
      if (n < 1 || n > (std::uint64_t{1} << 30)) throw ParseError("vertex count out of range", line_no);
      seq.n = static_cast<VertexId>(n);
      seq.pairs.reserve(n - 1);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("pair before 's <n>' header", line_no);
    std::uint64_t u = 0, v = 0;
    if (tok.size() != 2 || !detail::parse_uint(tok[0], u) || !detail::parse_uint(tok[1], v))
      throw ParseError("expected '<u> <v>'", line_no);
    const std::uint64_t max_id = 2 * std::uint64_t{seq.n} - 1;
    if (u < 1 || u > max_id || v < 1 || v > max_id)
      throw ParseError("vertex id out of range [1, " + std::to_string(max_id) + "]", line_no);
    if (u == v) throw ParseError("self-contraction of vertex " + std::to_string(u), line_no);
    if (seq.pairs.size() + 1 >= seq.n) throw ParseError("more than n-1 pairs", line_no);
    seq.pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (!have_header) throw ParseError("missing 's <n>' header");
  if (seq.pairs.size() + 1 != seq.n)
    throw ParseError("expected " + std::to_string(seq.n - 1) + " pairs, got " + std::to_string(seq.pairs.size()));
  return seq;
}

std::string serialize_sequence(const CompactSequence& seq) {
  std::string out = "s " + std::to_string(seq.n) + '\n';
  for (auto [u, v] : seq.pairs) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

SequenceReport replay(Trigraph& g, const CompactSequence& seq, ReplayObserver* observer) {
  if (g.contractions() != 0) throw SemanticError("replay needs a freshly built trigraph");
  if (g.original_order() != seq.n) {
    throw SemanticError("sequence is for " + std::to_string(seq.n) + " vertices, graph has " +
                        std::to_string(g.original_order()));
  }
  if (seq.pairs.size() + 1 != seq.n) throw SemanticError("sequence must have n-1 pairs");

  SequenceReport report;
  report.width = g.max_red_degree();
  ContractionPlan plan;
  for (std::size_t i = 0; i < seq.pairs.size(); ++i) {
    StepInfo step{i + 1, seq.pairs[i].first, seq.pairs[i].second, seq.product_id(i + 1)};
    if (!g.is_live(step.u) || !g.is_live(step.v) || step.u == step.v) {
      report.valid = false;
      report.failing_step = step.index;
      const VertexId bad = g.is_live(step.u) ? step.v : step.u;
      report.message = "step " + std::to_string(step.index) + ": vertex " + std::to_string(bad) +
                       (bad >= g.next_id() ? " does not exist yet" : " is no longer live");
      return report;
    }
    g.plan_contraction(step.u, step.v, plan);
    if (observer) observer->before_contraction(g, step, plan);
    g.apply(plan, step.w);
    report.width = std::max(report.width, g.max_red_degree());
    if (observer) observer->after_contraction(g, step);
  }
  return report;
}

SequenceReport replay(const EdgeList& graph, const CompactSequence& seq, ReplayObserver* observer) {
  Trigraph g = Trigraph::from_graph(graph);
  return replay(g, seq, observer);
}

namespace {

class WidthGate : public ReplayObserver {
 public:
  explicit WidthGate(std::size_t bound) : bound_(bound) {}
  void after_contraction(const Trigraph& g, const StepInfo& step) override {
    if (!first_violation_ && g.max_red_degree() > bound_) first_violation_ = step.index;
  }
  std::optional<std::size_t> first_violation() const { return first_violation_; }

 private:
  std::size_t bound_;
  std::optional<std::size_t> first_violation_;
};

}  // namespace

SequenceReport verify_width(const EdgeList& graph, const CompactSequence& seq, std::size_t max_red_degree) {
  WidthGate gate(max_red_degree);
  SequenceReport report = replay(graph, seq, &gate);
  if (!report.valid) return report;
  if (auto step = gate.first_violation()) {
    report.valid = false;
    report.failing_step = step;
    report.message = "step " + std::to_string(*step) + " exceeds red degree " + std::to_string(max_red_degree);
  }
  return report;
}

}  // namespace twtri
