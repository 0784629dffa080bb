#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twtri/sequence.hpp"
#include "twtri/trigraph.hpp"
#include "twtri/types.hpp"

namespace twtri {

// Per-vertex sizes of the original subgraph G^x folded into x, plus the number
// of original edges hidden behind every red edge.
struct AuxValues {
  std::vector<Count> n_of;  // |V(G^x)|, indexed by id
  std::vector<Count> m_of;  // |E(G^x)|, indexed by id
  std::unordered_map<std::uint64_t, Count> e_of;  // red edge {x,y} -> crossing original edges

  static AuxValues initial(VertexId n);
  static std::uint64_t key(VertexId x, VertexId y) {
    if (x > y) std::swap(x, y);
    return (std::uint64_t{x} << 32) | y;
  }

  // Throws InvariantViolation when {x,y} has no entry.
  Count e(VertexId x, VertexId y) const;
  void set_e(VertexId x, VertexId y, Count value) { e_of[key(x, y)] = value; }
  bool erase_e(VertexId x, VertexId y) { return e_of.erase(key(x, y)) != 0; }
};

// Where an original triangle {a,b,c} sits relative to the current
// super-vertices. The starred ones (OneBlack, ZeroBlack, EdgeRed, Inside) are
// already part of the running total and never leave it.
enum class CaseTag : std::uint8_t {
  ThreeBlack,  // (i)   three parts, all black
  TwoBlack,    // (ii)  three parts, two black one red
  OneBlack,    // (iii) three parts, one black two red
  ZeroBlack,   // (iv)  three parts, all red
  EdgeBlack,   // (v)   two parts joined by a black edge
  EdgeRed,     // (vi)  two parts joined by a red edge
  Inside,      // (vii) one part
};

bool is_counted(CaseTag c);
const char* to_string(CaseTag c);

// The transitions into counted cases, one per increment term.
enum class Transition : std::uint8_t {
  EdgeBlackToInside,     // black {u,v} collapses
  EdgeBlackToEdgeRed,    // black {s,x} with s in {u,v}, {w,x} turns red
  TwoBlackToEdgeRed,     // black {u,v}, x black to one side and red to the other
  TwoBlackToOneBlackViaRedNeighbor,  // x red to w, y black to w, {x,y} red
  ThreeBlackToOneBlack,  // x, y red to w, {x,y} black, s black to both
  TwoBlackToOneBlack,    // x, y red to w, {x,y} black, s red to one and black to the other
  TwoBlackToZeroBlack,   // x, y red to w, {x,y} red, s black to both
};

const char* to_string(Transition t);
CaseTag transition_source(Transition t);
CaseTag transition_target(Transition t);

// One nonzero addition to the running total. With part_count == 3 it covers
// the triangles with one vertex in each part; with part_count == 2 the
// triangles inside the union of the two parts that meet both. Parts are ids
// of G_k.
struct Increment {
  std::size_t step = 0;
  Transition kind = Transition::EdgeBlackToInside;
  std::array<VertexId, 3> parts{};
  int part_count = 0;
  Count amount = 0;
};

using IncrementSink = std::function<void(const Increment&)>;

struct CountCounters {
  Count contractions = 0;
  Count aux_updates = 0;           // aux entries written or erased
  Count one_neighbor_calls = 0;
  Count two_neighbor_pair_visits = 0;  // unordered pairs of red neighbors of w
  Count red_wedge_visits = 0;          // (x, y) visits of the red-neighbor-of-red-neighbor loop
  Count graph_update_work = 0;         // adjacency entries read or written by contractions
  Count pair_budget = 0;               // sum over steps of d_k^2
  Count width = 0;                     // max red degree witnessed
};

// Drives one counting run: for each contraction it counts the triangles that
// become counted on the way from G_k to G_{k-1}, then updates the auxiliary
// values. Every procedure reads colors of G_k; the neighborhood of w in
// G_{k-1} comes from the contraction plan.
class TriangleCounter {
 public:
  explicit TriangleCounter(VertexId n, IncrementSink sink = {});

  AuxValues& aux() { return aux_; }
  const AuxValues& aux() const { return aux_; }
  Count total() const { return total_; }
  const CountCounters& counters() const { return counters_; }

  // Counts the contraction described by plan (built on g == G_k) and updates
  // the auxiliary values for w. Returns the increment of the total.
  Count process(const Trigraph& g, const ContractionPlan& plan, VertexId w, std::size_t step = 0);

  // Black {u,v} collapsing: a vertex on one side plus an edge inside the other.
  Count count_black_edge_collapse(VertexId u, VertexId v);

  // Red {w,x}: triangles moving into the red-edge case.
  Count tri_count_one_neighbor(const ContractionPlan& plan, const PlanEntry& x);

  // Triangles spread over w and two other parts, at least one of which is a
  // red neighbor of w. Needs the product marks set by process(); call it
  // through process() unless the marks are prepared with mark_product().
  Count tri_count_two_neighbors(const Trigraph& g, const ContractionPlan& plan);

  // Records d_k, the larger max red degree of G_k and G_{k-1}, for the
  // pair budget and the witnessed width.
  void note_step_width(Count d_k);

  void mark_product(const ContractionPlan& plan);
  void clear_product(const ContractionPlan& plan);

  // New n_w, m_w and e_{w,x} for every red neighbor x of w; drops the entries
  // of u and v. Must run after the counting procedures of the same step.
  void update_auxiliary_values(const ContractionPlan& plan, VertexId w);

 private:
  Count add(Count a, Count b) const;
  Count mul(Count a, Count b) const;
  void emit(Transition kind, std::initializer_list<VertexId> parts, Count amount);

  AuxValues aux_;
  Count total_ = 0;
  CountCounters counters_;
  IncrementSink sink_;
  std::size_t step_ = 0;
  std::vector<EdgeColor> product_color_;  // color of {w,x} in G_{k-1}; None when unmarked
  std::vector<std::size_t> red_entries_;  // indices into plan.entries
};

struct CountOptions {
  enum class Mode { Fast, Checked };
  Mode mode = Mode::Fast;
  // Checked mode is refused above this order: invariant evaluation is cubic per step.
  VertexId checked_max_n = 64;
  // Verify the two conservation identities after every step (O(n + m) each).
  bool check_conservation = false;
  IncrementSink on_increment;
  // Called after each contraction with G_{k-1}, the aux values and the total.
  std::function<void(const Trigraph&, const AuxValues&, Count, const StepInfo&)> on_step;
};

struct CountResult {
  Count triangles = 0;
  CountCounters counters;
  std::size_t steps = 0;
};

// Triangle count of g driven by seq. Throws SemanticError for a sequence that
// does not replay on g and InvariantViolation when a checked-mode or
// conservation check fails.
CountResult count_triangles(const EdgeList& g, const CompactSequence& seq, const CountOptions& options = {});

// Throws InvariantViolation unless the live n_x sum to n, every red edge has an
// e entry (and nothing else does), and
//   sum m_x + sum_{red} e_{x,y} + sum_{black} n_x n_y == m.
void check_conservation(const Trigraph& g, const AuxValues& aux, Count n, Count m);

// Brute-force evaluation of the loop invariant on G_k:
//   |T(G)| == t + sum_{black triangles} n_x n_y n_z
//               + sum_{black x-y-z, red {x,z}} e_{x,z} n_y
//               + sum_{black {x,y}} (n_x m_y + m_x n_y)
bool evaluate_invariant(const Trigraph& g, const AuxValues& aux, Count t, Count original_triangles);

// Case of an original triangle given the current owner of each of its corners.
CaseTag classify_triangle(const Trigraph& g, VertexId owner_a, VertexId owner_b, VertexId owner_c);

}  // namespace twtri
