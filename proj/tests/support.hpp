#pragma once

// Helpers shared by the unit tests and the acceptance binary. The attribution
// checker tracks which original vertices each id stands for on its own,
// straight from the sequence, and recounts every increment by brute force.

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "twtri/counter.hpp"
#include "twtri/graph_io.hpp"
#include "twtri/oracle.hpp"
#include "twtri/sequence.hpp"

namespace twtri::testing {

// Every graph on n labelled vertices, one per subset of the C(n,2) pairs.
template <class F>
void for_each_graph(VertexId n, F&& f) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    EdgeList g{n, {}};
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.edges.push_back(pairs[i]);
    f(g);
  }
}

inline EdgeList random_gnp(VertexId n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  EdgeList g{n, {}};
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = a + 1; b <= n; ++b)
      if (coin(rng)) g.edges.emplace_back(a, b);
  return g;
}

// Contracts uniformly random live pairs. Always valid, usually wide.
inline CompactSequence random_sequence(VertexId n, std::mt19937_64& rng) {
  CompactSequence seq{n, {}};
  std::vector<VertexId> live(n);
  for (VertexId v = 1; v <= n; ++v) live[v - 1] = v;
  VertexId next = n + 1;
  while (live.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    seq.pairs.emplace_back(live[i], live[j]);
    if (i < j) std::swap(i, j);
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
    live.push_back(next++);
  }
  return seq;
}

inline Count binomial3(Count n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

using Triangle = std::array<VertexId, 3>;

inline std::vector<Triangle> list_triangles(const EdgeList& g) {
  const auto plain = oracle::PlainGraph::from_edges(g);
  std::vector<Triangle> out;
  for (VertexId a = 1; a <= g.n; ++a)
    for (VertexId b : plain.neighbors(a))
      if (b > a)
        for (VertexId c : plain.neighbors(b))
          if (c > b && plain.adjacent(a, c)) out.push_back({a, b, c});
  return out;
}

struct Attribution {
  Count triangles = 0;          // from the oracle
  Count counted = 0;            // result of count_triangles
  std::size_t increments = 0;
  std::size_t duplicates = 0;   // triangles claimed by more than one increment
  std::size_t missed = 0;       // triangles never claimed
  std::vector<std::string> errors;
  std::map<Transition, std::size_t> fired;  // nonzero increments per transition
  // TwoBlackToOneBlack increments whose red corner has the larger id, i.e.
  // the side is black to the earlier red neighbor and red to the later one.
  std::size_t black_then_red = 0;
  std::size_t red_then_black = 0;
  std::size_t both_red_updates = 0;  // steps where some x was red to u and to v

  bool ok() const { return errors.empty() && duplicates == 0 && missed == 0 && counted == triangles; }
};

// Runs the counter with per-increment and per-step hooks and checks that
//  - every increment equals the brute-force number of original triangles in
//    the configuration it names,
//  - those triangles sat in transition_source before the step and in
//    transition_target after it,
//  - every triangle is claimed exactly once over the whole run.
inline Attribution attribute(const EdgeList& graph, const CompactSequence& seq) {
  Attribution r;
  const auto tris = list_triangles(graph);
  const auto plain = oracle::PlainGraph::from_edges(graph);
  r.triangles = tris.size();

  std::vector<VertexId> owner(graph.n + 1);
  for (VertexId v = 1; v <= graph.n; ++v) owner[v] = v;
  std::vector<int> claims(tris.size(), 0);
  Trigraph before = Trigraph::from_graph(graph);
  std::vector<Increment> pending;

  auto describe = [](const Increment& inc) {
    std::string s = std::string(to_string(inc.kind)) + " step " + std::to_string(inc.step) + " parts";
    for (int i = 0; i < inc.part_count; ++i) s += " " + std::to_string(inc.parts[i]);
    return s;
  };

  // Triangles matching an increment, judged by the owners in G_k.
  auto matching = [&](const Increment& inc) {
    std::vector<std::size_t> hit;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      std::array<VertexId, 3> own{owner[tris[t][0]], owner[tris[t][1]], owner[tris[t][2]]};
      std::multiset<VertexId> got(own.begin(), own.end());
      if (inc.part_count == 3) {
        std::multiset<VertexId> want(inc.parts.begin(), inc.parts.end());
        if (got == want) hit.push_back(t);
      } else {
        const VertexId p = inc.parts[0], q = inc.parts[1];
        const bool inside = std::all_of(own.begin(), own.end(), [&](VertexId o) { return o == p || o == q; });
        if (inside && got.count(p) > 0 && got.count(q) > 0) hit.push_back(t);
      }
    }
    return hit;
  };

  // n_x, m_x and every e_{x,y} recounted from the parts.
  auto check_aux = [&](const Trigraph& g, const AuxValues& aux, std::size_t step) {
    const auto live = g.live_vertices();
    std::map<VertexId, std::vector<VertexId>> members;
    for (VertexId v = 1; v <= graph.n; ++v) members[owner[v]].push_back(v);
    auto crossing = [&](VertexId x, VertexId y) {
      Count c = 0;
      for (VertexId a : members[x])
        for (VertexId b : members[y]) c += plain.adjacent(a, b);
      return c;
    };
    const std::string at = " after step " + std::to_string(step);
    for (VertexId x : live) {
      if (aux.n_of[x] != members[x].size()) r.errors.push_back("n_" + std::to_string(x) + at);
      Count inside = 0;
      for (VertexId a : members[x])
        for (VertexId b : members[x]) inside += a < b && plain.adjacent(a, b);
      if (aux.m_of[x] != inside) r.errors.push_back("m_" + std::to_string(x) + at);
      for (VertexId y : g.red_neighbors(x))
        if (x < y && aux.e(x, y) != crossing(x, y))
          r.errors.push_back("e_{" + std::to_string(x) + "," + std::to_string(y) + "}" + at);
    }
  };

  CountOptions options;
  options.check_conservation = true;
  options.on_increment = [&](const Increment& inc) { pending.push_back(inc); };
  options.on_step = [&](const Trigraph& after, const AuxValues& aux, Count, const StepInfo& step) {
    for (const PlanEntry& e : before.plan_contraction(step.u, step.v).entries)
      if (e.to_u == EdgeColor::Red && e.to_v == EdgeColor::Red) {
        ++r.both_red_updates;
        break;
      }
    std::vector<VertexId> next_owner = owner;
    for (VertexId v = 1; v <= graph.n; ++v)
      if (owner[v] == step.u || owner[v] == step.v) next_owner[v] = step.w;

    for (const Increment& inc : pending) {
      ++r.increments;
      ++r.fired[inc.kind];
      if (inc.kind == Transition::TwoBlackToOneBlack) ++(inc.parts[1] > inc.parts[2] ? r.black_then_red : r.red_then_black);
      const auto hit = matching(inc);
      if (hit.size() != inc.amount)
        r.errors.push_back(describe(inc) + ": amount " + std::to_string(inc.amount) + ", brute force " +
                           std::to_string(hit.size()));
      for (std::size_t t : hit) {
        if (++claims[t] == 2) ++r.duplicates;
        const auto& tri = tris[t];
        const CaseTag from = classify_triangle(before, owner[tri[0]], owner[tri[1]], owner[tri[2]]);
        const CaseTag to = classify_triangle(after, next_owner[tri[0]], next_owner[tri[1]], next_owner[tri[2]]);
        if (from != transition_source(inc.kind) || to != transition_target(inc.kind))
          r.errors.push_back(describe(inc) + ": triangle moves " + to_string(from) + " -> " + to_string(to));
      }
    }
    pending.clear();
    owner = std::move(next_owner);
    before = after;
    check_aux(after, aux, step.index);
  };

  r.counted = count_triangles(graph, seq, options).triangles;
  for (int c : claims) r.missed += c == 0;
  return r;
}

}  // namespace twtri::testing
