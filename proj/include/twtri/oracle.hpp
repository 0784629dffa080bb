#pragma once

#include <vector>

#include "twtri/sequence.hpp"
#include "twtri/types.hpp"

// Brute-force triangle counters used as ground truth. Nothing here touches
// the trigraph or the counting code.
namespace twtri::oracle {

class PlainGraph {
 public:
  // Deduplicates and symmetrizes; throws SemanticError on self-loops or
  // out-of-range endpoints.
  static PlainGraph from_edges(const EdgeList& g);

  VertexId order() const { return n_; }
  std::size_t edge_count() const { return m_; }
  // Sorted neighbors of v, 1-based ids.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  bool adjacent(VertexId a, VertexId b) const;

 private:
  VertexId n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<VertexId>> adj_;  // index 0 unused
};

// Edge iteration with sorted-list intersection, each triangle counted once
// from its smallest corner. OpenMP-parallel over the smallest corner.
Count count_naive(const PlainGraph& g);
// Same kernel, single-threaded. Kept as the reference for the parallel one.
Count count_naive_serial(const PlainGraph& g);
// O(n^3) triple loop over an adjacency matrix.
Count count_triple_loop(const PlainGraph& g);

// count_triangles(g, seq) == count_naive(g). Invalid sequences propagate
// SemanticError.
bool cross_check(const EdgeList& g, const CompactSequence& seq);

}  // namespace twtri::oracle
