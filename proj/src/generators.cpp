#include "twtri/generators.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "twtri/graph_io.hpp"

namespace twtri {

std::size_t Cotree::leaf_count() const {
  std::size_t leaves = 0;
  for (const Node& node : nodes) leaves += node.kind == Kind::Leaf;
  return leaves;
}

EdgeList Cotree::to_graph() const {
  EdgeList g;
  g.n = static_cast<VertexId>(leaf_count());
  if (nodes.empty()) return g;
  // Leaves under each node, children before parents.
  std::vector<std::vector<VertexId>> below(nodes.size());
  std::vector<std::pair<std::size_t, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const Node& node = nodes[id];
    if (node.kind == Kind::Leaf) {
      below[id] = {node.vertex};
      continue;
    }
    if (!expanded) {
      stack.emplace_back(id, true);
      for (std::size_t c : node.children) stack.emplace_back(c, false);
      continue;
    }
    for (std::size_t a = 0; a < node.children.size(); ++a) {
      const auto& left = below[node.children[a]];
      if (node.kind == Kind::Series) {
        for (std::size_t b = a + 1; b < node.children.size(); ++b)
          for (VertexId x : left)
            for (VertexId y : below[node.children[b]]) g.edges.emplace_back(std::min(x, y), std::max(x, y));
      }
    }
    for (std::size_t c : node.children) {
      auto& part = below[c];
      below[id].insert(below[id].end(), part.begin(), part.end());
      std::vector<VertexId>().swap(part);
    }
  }
  return g;
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Gnp, Family::Cograph, Family::Complete, Family::Path, Family::Cycle, Family::Grid,
                   Family::Star, Family::Petersen})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Gnp: return "gnp";
    case Family::Cograph: return "cograph";
    case Family::Complete: return "complete";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Grid: return "grid";
    case Family::Star: return "star";
    case Family::Petersen: return "petersen";
  }
  return "?";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Cotree random_cotree(VertexId n, double join_prob, std::mt19937_64& rng) {
  Cotree t;
  std::vector<std::size_t> roots;
  for (VertexId v = 1; v <= n; ++v) {
    t.nodes.push_back({Cotree::Kind::Leaf, v, {}});
    roots.push_back(t.nodes.size() - 1);
  }
  std::bernoulli_distribution series(join_prob);
  while (roots.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    const std::size_t i = pick(rng);
    std::swap(roots[i], roots.back());
    const std::size_t a = roots.back();
    roots.pop_back();
    std::uniform_int_distribution<std::size_t> pick2(0, roots.size() - 1);
    const std::size_t j = pick2(rng);
    const std::size_t b = roots[j];
    t.nodes.push_back({series(rng) ? Cotree::Kind::Series : Cotree::Kind::Parallel, kNoVertex, {a, b}});
    roots[j] = t.nodes.size() - 1;
  }
  t.root = roots.front();
  return t;
}

Cotree star_cotree(VertexId n) {
  // Series(center, Parallel(leaves)); n == 1 is a single leaf.
  Cotree t;
  t.nodes.push_back({Cotree::Kind::Leaf, 1, {}});
  if (n == 1) return t;
  Cotree::Node leaves{Cotree::Kind::Parallel, kNoVertex, {}};
  for (VertexId v = 2; v <= n; ++v) {
    t.nodes.push_back({Cotree::Kind::Leaf, v, {}});
    leaves.children.push_back(t.nodes.size() - 1);
  }
  t.nodes.push_back(std::move(leaves));
  t.nodes.push_back({Cotree::Kind::Series, kNoVertex, {0, t.nodes.size() - 1}});
  t.root = t.nodes.size() - 1;
  return t;
}

Cotree complete_cotree(VertexId n) {
  Cotree t;
  Cotree::Node join{Cotree::Kind::Series, kNoVertex, {}};
  for (VertexId v = 1; v <= n; ++v) {
    t.nodes.push_back({Cotree::Kind::Leaf, v, {}});
    join.children.push_back(t.nodes.size() - 1);
  }
  if (n == 1) return t;
  t.nodes.push_back(std::move(join));
  t.root = t.nodes.size() - 1;
  return t;
}

}  // namespace

GeneratedGraph gen_graph(Family family, const FamilyParams& params, std::uint64_t seed) {
  GeneratedGraph out;
  EdgeList& g = out.graph;
  const VertexId n = params.n;
  switch (family) {
    case Family::Gnp: {
      require(n >= 1, "gnp needs n >= 1");
      require(params.p >= 0.0 && params.p <= 1.0, "gnp needs 0 <= p <= 1");
      std::mt19937_64 rng(seed);
      std::bernoulli_distribution coin(params.p);
      g.n = n;
      for (VertexId a = 1; a <= n; ++a)
        for (VertexId b = a + 1; b <= n; ++b)
          if (coin(rng)) g.edges.emplace_back(a, b);
      break;
    }
    case Family::Cograph: {
      require(n >= 1, "cograph needs n >= 1");
      require(params.join_prob >= 0.0 && params.join_prob <= 1.0, "cograph needs 0 <= join_prob <= 1");
      std::mt19937_64 rng(seed);
      out.cotree = random_cotree(n, params.join_prob, rng);
      g = out.cotree->to_graph();
      break;
    }
    case Family::Complete:
      require(n >= 1, "complete needs n >= 1");
      out.cotree = complete_cotree(n);
      g = out.cotree->to_graph();
      break;
    case Family::Star:
      require(n >= 1, "star needs n >= 1");
      out.cotree = star_cotree(n);
      g = out.cotree->to_graph();
      break;
    case Family::Path:
      require(n >= 1, "path needs n >= 1");
      g.n = n;
      for (VertexId v = 1; v < n; ++v) g.edges.emplace_back(v, v + 1);
      break;
    case Family::Cycle:
      require(n >= 3, "cycle needs n >= 3");
      g.n = n;
      for (VertexId v = 1; v < n; ++v) g.edges.emplace_back(v, v + 1);
      g.edges.emplace_back(1, n);
      break;
    case Family::Grid: {
      require(params.rows >= 1 && params.cols >= 1, "grid needs rows, cols >= 1");
      g.n = params.rows * params.cols;
      auto id = [&](VertexId r, VertexId c) { return r * params.cols + c + 1; };
      for (VertexId r = 0; r < params.rows; ++r)
        for (VertexId c = 0; c < params.cols; ++c) {
          if (c + 1 < params.cols) g.edges.emplace_back(id(r, c), id(r, c + 1));
          if (r + 1 < params.rows) g.edges.emplace_back(id(r, c), id(r + 1, c));
        }
      break;
    }
    case Family::Petersen:
      g.n = 10;
      for (VertexId i = 0; i < 5; ++i) {
        g.edges.emplace_back(i + 1, (i + 1) % 5 + 1);          // outer cycle
        g.edges.emplace_back(i + 1, i + 6);                    // spokes
        g.edges.emplace_back(i + 6, (i + 2) % 5 + 6);          // inner pentagram
      }
      break;
  }
  return out;
}

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("TWTRI_SEED");
  std::uint64_t seed = 0;
  if (env && detail::parse_uint(env, seed)) return seed;
  return fallback;
}

}  // namespace twtri
