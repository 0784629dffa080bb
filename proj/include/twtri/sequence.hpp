#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twtri/trigraph.hpp"
#include "twtri/types.hpp"

namespace twtri {

// Compact contraction sequence: the i-th pair (1-based) is contracted into
// vertex n + i. Products are never written out; they are implied by position.
struct CompactSequence {
  VertexId n = 0;
  std::vector<std::pair<VertexId, VertexId>> pairs;

  VertexId product_id(std::size_t step) const { return n + static_cast<VertexId>(step); }
  bool operator==(const CompactSequence&) const = default;
};

// Sequence file format:
//   c <free text>   comment
//   s <n>           header
//   <u> <v>         n-1 pair lines
CompactSequence parse_sequence(std::string_view text);
std::string serialize_sequence(const CompactSequence& seq);

struct SequenceReport {
  std::size_t width = 0;                   // max red degree over G_{n-1} .. G_1
  bool valid = true;
  std::optional<std::size_t> failing_step;  // 1-based pair index
  std::string message;
};

// 1-based step index, contracted pair and the product id.
struct StepInfo {
  std::size_t index = 0;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  VertexId w = kNoVertex;
};

// Hooks around each contraction. before_contraction sees G_k together with
// the plan for G_{k-1}; after_contraction sees G_{k-1}.
class ReplayObserver {
 public:
  virtual ~ReplayObserver() = default;
  virtual void before_contraction(const Trigraph& g, const StepInfo& step, const ContractionPlan& plan) {
    (void)g, (void)step, (void)plan;
  }
  virtual void after_contraction(const Trigraph& g, const StepInfo& step) { (void)g, (void)step; }
};

// Applies the whole sequence to a freshly built trigraph. A step naming a dead
// or not yet created vertex stops the replay and marks the report invalid.
// Throws SemanticError if g is not fresh or its order differs from seq.n.
SequenceReport replay(Trigraph& g, const CompactSequence& seq, ReplayObserver* observer = nullptr);
SequenceReport replay(const EdgeList& g, const CompactSequence& seq, ReplayObserver* observer = nullptr);

// valid iff every intermediate trigraph has red degree at most max_red_degree.
// failing_step is the first step that exceeds it; the width is still reported
// for the whole sequence.
SequenceReport verify_width(const EdgeList& g, const CompactSequence& seq, std::size_t max_red_degree);

}  // namespace twtri
