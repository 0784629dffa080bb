#pragma once

#include <cstddef>
#include <ranges>
#include <string>
#include <vector>

#include "twtri/types.hpp"

namespace twtri {

// One neighbor x of {u, v} and its colors towards u and v in the trigraph
// before contraction.
struct PlanEntry {
  VertexId x = kNoVertex;
  EdgeColor to_u = EdgeColor::None;
  EdgeColor to_v = EdgeColor::None;

  // Color of {w, x} after contracting u and v into w.
  EdgeColor merged() const {
    return (to_u == EdgeColor::Black && to_v == EdgeColor::Black) ? EdgeColor::Black : EdgeColor::Red;
  }
};

// Neighborhood of the product of contracting u and v, computed from the
// current trigraph without mutating it.
struct ContractionPlan {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  EdgeColor uv = EdgeColor::None;
  std::vector<PlanEntry> entries;  // sorted by x, u and v excluded
  std::size_t scanned = 0;         // adjacency entries read to build the plan
  std::size_t generation = 0;      // contraction count of the trigraph it was built on

  std::size_t product_red_degree() const;
  std::size_t product_black_degree() const;
};

// Mutable trigraph (V, E, R) under the contraction G/u,v.
//
// Adjacency lists are sorted ascending. A contraction kills u and v and appends
// w, which always carries the largest id so far, to its neighbors' lists; the
// dead u/v entries stay behind as tombstones and are dropped lazily once they
// make up half of a list. Queries only ever report live neighbors.
class Trigraph {
  struct IsLive {
    const std::vector<char>* alive;
    bool operator()(VertexId x) const { return (*alive)[x] != 0; }
  };

 public:
  using NeighborView = std::ranges::filter_view<std::ranges::ref_view<const std::vector<VertexId>>, IsLive>;

  Trigraph() = default;

  // O(n + m): counting sort into per-vertex lists, duplicates and reversed
  // pairs collapse. Throws SemanticError on self-loops or bad endpoints.
  static Trigraph from_graph(const EdgeList& g);

  VertexId original_order() const { return n_; }
  // Id the next contraction product receives.
  VertexId next_id() const { return n_ + static_cast<VertexId>(contractions_) + 1; }
  std::size_t contractions() const { return contractions_; }
  std::size_t live_count() const { return live_count_; }
  bool is_live(VertexId v) const { return v >= 1 && v < alive_.size() && alive_[v]; }
  std::vector<VertexId> live_vertices() const;

  EdgeColor edge_color(VertexId u, VertexId v) const;
  // Same as edge_color without liveness checks; both ids must be live and distinct.
  EdgeColor color_unchecked(VertexId u, VertexId v) const;

  std::size_t red_degree(VertexId v) const;
  std::size_t black_degree(VertexId v) const;
  std::size_t max_red_degree() const { return max_red_; }
  std::size_t red_edge_count() const { return red_edges_; }
  std::size_t black_edge_count() const { return black_edges_; }

  NeighborView black_neighbors(VertexId v) const { return live_view(black_.at(v)); }
  NeighborView red_neighbors(VertexId v) const { return live_view(red_.at(v)); }

  void plan_contraction(VertexId u, VertexId v, ContractionPlan& out) const;
  ContractionPlan plan_contraction(VertexId u, VertexId v) const;

  // Applies a plan built on the current state; w must equal next_id().
  void apply(const ContractionPlan& plan, VertexId w);

  // Plans and applies in one go. Returns the new vertex id.
  VertexId contract(VertexId u, VertexId v);
  void contract(VertexId u, VertexId v, VertexId w);

  // Adjacency entries read or written by contractions so far.
  Count update_work() const { return update_work_; }

  // Throws InvariantViolation describing the first broken structural property.
  void check_consistency() const;

  // Canonical text of the live part: one line per live vertex.
  std::string serialize() const;

 private:
  NeighborView live_view(const std::vector<VertexId>& list) const {
    return NeighborView(std::ranges::ref_view(list), IsLive{&alive_});
  }
  void require_live(VertexId v, const char* what) const;
  void set_red_degree(VertexId v, std::size_t deg);
  void maybe_compact(VertexId x);

  VertexId n_ = 0;
  std::size_t contractions_ = 0;
  std::size_t live_count_ = 0;
  std::size_t red_edges_ = 0;
  std::size_t black_edges_ = 0;
  std::size_t max_red_ = 0;
  Count update_work_ = 0;

  std::vector<char> alive_;
  std::vector<std::vector<VertexId>> black_;
  std::vector<std::vector<VertexId>> red_;
  std::vector<std::uint32_t> black_deg_;
  std::vector<std::uint32_t> red_deg_;
  std::vector<std::uint32_t> black_stale_;
  std::vector<std::uint32_t> red_stale_;
  std::vector<std::size_t> red_hist_;  // red_hist_[k] = live vertices with red degree k
};

}  // namespace twtri
