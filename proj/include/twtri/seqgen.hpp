#pragma once

#include <compare>
#include <cstddef>
#include <optional>

#include "twtri/generators.hpp"
#include "twtri/sequence.hpp"
#include "twtri/trigraph.hpp"

namespace twtri {

struct GeneratedSequence {
  CompactSequence sequence;
  std::size_t width = 0;
};

// Largest order gen_exact accepts by default, and the hard ceiling of the
// partition encoding.
inline constexpr VertexId kExactDefaultMaxN = 9;
inline constexpr VertexId kExactHardMaxN = 16;

// Minimum-width sequence by exhaustive search. A trigraph reached by
// contractions is determined by the partition of the original vertices into
// parts, so the search runs over partitions, memoized, with branch-and-bound
// on the running max red degree. Ties go to the first pair in (min vertex of
// part a, min vertex of part b) order. Throws SemanticError above max_n.
GeneratedSequence gen_exact(const EdgeList& g, VertexId max_n = kExactDefaultMaxN);

// Score of contracting one pair in the greedy heuristic. Lower is better:
// resulting max red degree, then resulting red edge count, then smaller pair.
struct PairScore {
  std::size_t max_red = 0;
  std::size_t total_red = 0;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;

  auto operator<=>(const PairScore&) const = default;
};

// Best pair over all live pairs of g (g must have >= 2 live vertices). Both
// kernels return the same pair; the parallel one splits the outer loop across
// OpenMP threads.
PairScore best_pair_serial(const Trigraph& g);
PairScore best_pair_parallel(const Trigraph& g);

struct GreedyOptions {
  bool parallel = true;
};

// Repeatedly contracts the best-scoring pair. No optimality guarantee; on
// graphs without red edges it always picks a twin pair when one exists.
GeneratedSequence gen_greedy(const EdgeList& g, const GreedyOptions& options = {});

// Width-0 sequence contracting sibling subtrees of the cotree bottom-up.
// Throws SemanticError when the cotree leaves are not exactly 1..g.n.
CompactSequence gen_twin_first(const EdgeList& g, const Cotree& cotree);

// Width-0 sequence found by repeatedly contracting the first twin pair, for
// graphs given without a cotree. nullopt when g is not a cograph.
std::optional<CompactSequence> gen_twin_elimination(const EdgeList& g);

}  // namespace twtri
