#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twtri/types.hpp"

namespace twtri {

// Cotree of a cograph: leaves are graph vertices, a series node joins its
// children completely, a parallel node takes their disjoint union.
struct Cotree {
  enum class Kind : std::uint8_t { Leaf, Series, Parallel };
  struct Node {
    Kind kind = Kind::Leaf;
    VertexId vertex = kNoVertex;  // leaves only
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  std::size_t root = 0;

  std::size_t leaf_count() const;
  // Edge list of the cograph described by this cotree, on n = leaf_count() vertices.
  EdgeList to_graph() const;
};

enum class Family { Gnp, Cograph, Complete, Path, Cycle, Grid, Star, Petersen };

std::optional<Family> parse_family(std::string_view name);
const char* to_string(Family f);

struct FamilyParams {
  VertexId n = 0;          // all families except grid and petersen
  double p = 0.5;          // gnp edge probability
  double join_prob = 0.5;  // cograph: probability that an internal node is a series node
  VertexId rows = 0;       // grid
  VertexId cols = 0;       // grid
};

struct GeneratedGraph {
  EdgeList graph;
  std::optional<Cotree> cotree;  // set for cographs, complete graphs and stars
};

// Deterministic for a given (family, params, seed). Throws std::invalid_argument
// on parameters the family cannot take.
GeneratedGraph gen_graph(Family family, const FamilyParams& params, std::uint64_t seed);

// Seed from the TWTRI_SEED environment variable, or fallback when unset or
// unparsable.
std::uint64_t default_seed(std::uint64_t fallback = 1);

}  // namespace twtri
