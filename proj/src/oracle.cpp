#include "twtri/oracle.hpp"

#include <algorithm>

#include "twtri/counter.hpp"

namespace twtri::oracle {

PlainGraph PlainGraph::from_edges(const EdgeList& g) {
  PlainGraph p;
  p.n_ = g.n;
  p.adj_.assign(static_cast<std::size_t>(g.n) + 1, {});
  for (auto [a, b] : g.edges) {
    if (a < 1 || a > g.n || b < 1 || b > g.n) throw SemanticError("edge endpoint out of range");
    if (a == b) throw SemanticError("self-loop on vertex " + std::to_string(a));
    p.adj_[a].push_back(b);
    p.adj_[b].push_back(a);
  }
  for (auto& list : p.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    p.m_ += list.size();
  }
  p.m_ /= 2;
  return p;
}

bool PlainGraph::adjacent(VertexId a, VertexId b) const {
  const auto& list = adj_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

namespace {

// Triangles {a < b < c} with smallest corner a.
Count triangles_at(const PlainGraph& g, VertexId a) {
  const auto& na = g.neighbors(a);
  Count count = 0;
  auto first_above_a = std::upper_bound(na.begin(), na.end(), a);
  for (auto it = first_above_a; it != na.end(); ++it) {
    const VertexId b = *it;
    const auto& nb = g.neighbors(b);
    auto i = it + 1;
    auto j = std::upper_bound(nb.begin(), nb.end(), b);
    while (i != na.end() && j != nb.end()) {
      if (*i < *j) ++i;
      else if (*j < *i) ++j;
      else {
        ++count;
        ++i;
        ++j;
      }
    }
  }
  return count;
}

}  // namespace

Count count_naive_serial(const PlainGraph& g) {
  Count total = 0;
  for (VertexId a = 1; a <= g.order(); ++a) total += triangles_at(g, a);
  return total;
}

Count count_naive(const PlainGraph& g) {
  Count total = 0;
  const long long n = g.order();
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (long long a = 1; a <= n; ++a) total += triangles_at(g, static_cast<VertexId>(a));
  return total;
}

Count count_triple_loop(const PlainGraph& g) {
  const std::size_t n = g.order();
  std::vector<char> adj((n + 1) * (n + 1), 0);
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b : g.neighbors(a)) adj[a * (n + 1) + b] = 1;
  Count total = 0;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b) {
      if (!adj[a * (n + 1) + b]) continue;
      for (std::size_t c = b + 1; c <= n; ++c) total += adj[a * (n + 1) + c] && adj[b * (n + 1) + c];
    }
  return total;
}

bool cross_check(const EdgeList& g, const CompactSequence& seq) {
  return count_triangles(g, seq).triangles == count_naive(PlainGraph::from_edges(g));
}

}  // namespace twtri::oracle
