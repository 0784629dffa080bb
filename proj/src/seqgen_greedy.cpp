#include <algorithm>
#include <limits>
#include <map>
#include <optional>

#include "twtri/seqgen.hpp"

namespace twtri {

namespace {

// Live vertices by red degree, highest first. The max over vertices a
// contraction leaves untouched is the first entry not stamped.
struct ScoringContext {
  const Trigraph& g;
  std::vector<VertexId> live;
  std::vector<VertexId> by_red_degree;
};

ScoringContext make_context(const Trigraph& g) {
  ScoringContext ctx{g, g.live_vertices(), {}};
  ctx.by_red_degree = ctx.live;
  std::stable_sort(ctx.by_red_degree.begin(), ctx.by_red_degree.end(),
                   [&](VertexId a, VertexId b) { return g.red_degree(a) > g.red_degree(b); });
  return ctx;
}

// Per-thread scratch.
struct Scratch {
  ContractionPlan plan;
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
};

PairScore score_pair(const ScoringContext& ctx, Scratch& s, VertexId u, VertexId v) {
  const Trigraph& g = ctx.g;
  g.plan_contraction(u, v, s.plan);
  if (s.stamp.size() < g.next_id()) s.stamp.assign(g.next_id() + 1, 0);
  if (++s.epoch == 0) {
    std::fill(s.stamp.begin(), s.stamp.end(), 0);
    s.epoch = 1;
  }
  s.stamp[u] = s.stamp[v] = s.epoch;

  std::size_t red_w = 0, worst = 0;
  for (const PlanEntry& e : s.plan.entries) {
    s.stamp[e.x] = s.epoch;
    const bool red = e.merged() == EdgeColor::Red;
    red_w += red;
    const std::size_t deg = g.red_degree(e.x) - (e.to_u == EdgeColor::Red) - (e.to_v == EdgeColor::Red) + red;
    worst = std::max(worst, deg);
  }
  worst = std::max(worst, red_w);
  for (VertexId x : ctx.by_red_degree) {
    if (s.stamp[x] == s.epoch) continue;
    worst = std::max<std::size_t>(worst, g.red_degree(x));
    break;
  }
  const std::size_t removed = g.red_degree(u) + g.red_degree(v) - (s.plan.uv == EdgeColor::Red);
  return PairScore{worst, g.red_edge_count() - removed + red_w, u, v};
}

PairScore worst_score() {
  const std::size_t inf = std::numeric_limits<std::size_t>::max();
  return PairScore{inf, inf, std::numeric_limits<VertexId>::max(), std::numeric_limits<VertexId>::max()};
}

void require_pair(const Trigraph& g) {
  if (g.live_count() < 2) throw SemanticError("greedy: need at least two live vertices");
}

}  // namespace

PairScore best_pair_serial(const Trigraph& g) {
  require_pair(g);
  const ScoringContext ctx = make_context(g);
  Scratch scratch;
  PairScore best = worst_score();
  for (std::size_t i = 0; i < ctx.live.size(); ++i)
    for (std::size_t j = i + 1; j < ctx.live.size(); ++j)
      best = std::min(best, score_pair(ctx, scratch, ctx.live[i], ctx.live[j]));
  return best;
}

PairScore best_pair_parallel(const Trigraph& g) {
  require_pair(g);
  const ScoringContext ctx = make_context(g);
  PairScore best = worst_score();
  const long long k = static_cast<long long>(ctx.live.size());
#pragma omp parallel
  {
    Scratch scratch;
    PairScore local = worst_score();
#pragma omp for schedule(dynamic, 4) nowait
    for (long long i = 0; i < k; ++i)
      for (long long j = i + 1; j < k; ++j)
        local = std::min(local, score_pair(ctx, scratch, ctx.live[i], ctx.live[j]));
#pragma omp critical
    best = std::min(best, local);
  }
  return best;
}

GeneratedSequence gen_greedy(const EdgeList& graph, const GreedyOptions& options) {
  Trigraph g = Trigraph::from_graph(graph);
  GeneratedSequence out;
  out.sequence.n = graph.n;
  while (g.live_count() > 1) {
    const PairScore best = options.parallel ? best_pair_parallel(g) : best_pair_serial(g);
    out.sequence.pairs.emplace_back(best.u, best.v);
    g.contract(best.u, best.v);
    out.width = std::max(out.width, g.max_red_degree());
  }
  return out;
}

CompactSequence gen_twin_first(const EdgeList& g, const Cotree& cotree) {
  if (cotree.nodes.empty() || cotree.leaf_count() != g.n) throw SemanticError("cotree does not match the graph");
  std::vector<char> seen(static_cast<std::size_t>(g.n) + 1, 0);
  for (const auto& node : cotree.nodes) {
    if (node.kind != Cotree::Kind::Leaf) continue;
    if (node.vertex < 1 || node.vertex > g.n || seen[node.vertex]) throw SemanticError("cotree leaves are not 1..n");
    seen[node.vertex] = 1;
  }

  CompactSequence seq;
  seq.n = g.n;
  VertexId next = g.n + 1;
  // Post-order; rep[id] is the vertex a finished subtree was contracted into.
  std::vector<VertexId> rep(cotree.nodes.size(), kNoVertex);
  std::vector<std::pair<std::size_t, bool>> stack{{cotree.root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto& node = cotree.nodes[id];
    if (node.kind == Cotree::Kind::Leaf) {
      rep[id] = node.vertex;
      continue;
    }
    if (!expanded) {
      stack.emplace_back(id, true);
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.emplace_back(*it, false);
      continue;
    }
    if (node.children.empty()) throw SemanticError("cotree has an empty internal node");
    VertexId cur = rep[node.children.front()];
    for (std::size_t c = 1; c < node.children.size(); ++c) {
      seq.pairs.emplace_back(cur, rep[node.children[c]]);
      cur = next++;
    }
    rep[id] = cur;
  }
  return seq;
}

std::optional<CompactSequence> gen_twin_elimination(const EdgeList& graph) {
  Trigraph g = Trigraph::from_graph(graph);
  CompactSequence seq;
  seq.n = graph.n;
  while (g.live_count() > 1) {
    // First vertex whose open or closed neighborhood repeats an earlier one.
    std::map<std::vector<VertexId>, VertexId> open, closed;
    std::optional<std::pair<VertexId, VertexId>> twins;
    for (VertexId x : g.live_vertices()) {
      auto view = g.black_neighbors(x);
      std::vector<VertexId> nb(view.begin(), view.end());
      if (auto [it, fresh] = open.emplace(nb, x); !fresh) {
        twins.emplace(it->second, x);
        break;
      }
      nb.insert(std::upper_bound(nb.begin(), nb.end(), x), x);
      if (auto [it, fresh] = closed.emplace(std::move(nb), x); !fresh) {
        twins.emplace(it->second, x);
        break;
      }
    }
    if (!twins) return std::nullopt;
    seq.pairs.push_back(*twins);
    g.contract(twins->first, twins->second);
    if (g.red_edge_count() != 0) return std::nullopt;
  }
  return seq;
}

}  // namespace twtri
