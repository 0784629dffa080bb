#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twtri {

// 1-based. Originals are 1..n, contraction products n+1..2n-1.
using VertexId = std::uint32_t;
using Count = std::uint64_t;

inline constexpr VertexId kNoVertex = 0;

enum class EdgeColor : std::uint8_t { None, Black, Red };

const char* to_string(EdgeColor c);

// Plain undirected input graph as read from a file. Edge order is kept so the
// file round-trips; consumers deduplicate on their own.
struct EdgeList {
  VertexId n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  bool operator==(const EdgeList&) const = default;
};

// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that is semantically unusable (bad vertex, wrong n, ...).
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twtri
