#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "twtri/seqgen.hpp"

namespace twtri {

namespace {

using Mask = std::uint32_t;

// Parts of a partition, ordered by their smallest original vertex.
using Partition = std::vector<Mask>;

class ExactSearch {
 public:
  explicit ExactSearch(const EdgeList& g) : n_(g.n), nbr_(g.n, 0) {
    for (auto [a, b] : g.edges) {
      nbr_[a - 1] |= Mask{1} << (b - 1);
      nbr_[b - 1] |= Mask{1} << (a - 1);
    }
  }

  // Minimum over contraction orders of the largest red degree of any
  // partition strictly after p.
  std::size_t best_from(const Partition& p) {
    if (p.size() <= 1) return 0;
    const std::uint64_t key = encode(p);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Summary s = summarize(p);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < p.size() && best > 0; ++i) {
      for (std::size_t j = i + 1; j < p.size() && best > 0; ++j) {
        const std::size_t red = red_after_merge(p, s, i, j);
        if (red >= best) continue;
        best = std::min(best, std::max(red, best_from(merged(p, i, j))));
      }
    }
    memo_.emplace(key, best);
    return best;
  }

  GeneratedSequence reconstruct() {
    Partition p;
    for (VertexId v = 0; v < n_; ++v) p.push_back(Mask{1} << v);
    std::vector<VertexId> ids(n_);
    for (VertexId v = 0; v < n_; ++v) ids[v] = v + 1;

    GeneratedSequence out;
    out.sequence.n = n_;
    out.width = best_from(p);
    VertexId next = n_ + 1;
    while (p.size() > 1) {
      const std::size_t target = best_from(p);
      const Summary s = summarize(p);
      bool found = false;
      for (std::size_t i = 0; i < p.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < p.size() && !found; ++j) {
          const std::size_t red = red_after_merge(p, s, i, j);
          if (red > target) continue;
          Partition child = merged(p, i, j);
          if (std::max(red, best_from(child)) != target) continue;
          out.sequence.pairs.emplace_back(ids[i], ids[j]);
          ids[i] = next++;
          ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(j));
          p = std::move(child);
          found = true;
        }
      }
      if (!found) throw InvariantViolation("exact search: no move attains the memoized width");
    }
    return out;
  }

 private:
  struct Summary {
    std::vector<Mask> any;                 // union of neighborhoods over the part
    std::vector<Mask> all;                 // intersection of neighborhoods over the part
    std::vector<std::uint8_t> red;         // red[i * k + j]
    std::vector<std::size_t> red_degree;
  };

  static bool red_between(Mask any_a, Mask all_a, Mask b) {
    const bool black = (b & ~all_a) == 0;
    const bool none = (b & any_a) == 0;
    return !black && !none;
  }

  Summary summarize(const Partition& p) const {
    const std::size_t k = p.size();
    Summary s{std::vector<Mask>(k, 0), std::vector<Mask>(k, ~Mask{0}), std::vector<std::uint8_t>(k * k, 0),
              std::vector<std::size_t>(k, 0)};
    for (std::size_t i = 0; i < k; ++i) {
      for (Mask rest = p[i]; rest; rest &= rest - 1) {
        const Mask nb = nbr_[std::countr_zero(rest)];
        s.any[i] |= nb;
        s.all[i] &= nb;
      }
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (red_between(s.any[i], s.all[i], p[j])) {
          s.red[i * k + j] = s.red[j * k + i] = 1;
          ++s.red_degree[i];
          ++s.red_degree[j];
        }
    return s;
  }

  // Max red degree of the partition obtained by merging parts i and j.
  static std::size_t red_after_merge(const Partition& p, const Summary& s, std::size_t i, std::size_t j) {
    const std::size_t k = p.size();
    const Mask any = s.any[i] | s.any[j];
    const Mask all = s.all[i] & s.all[j];
    std::size_t merged_red = 0, worst = 0;
    for (std::size_t l = 0; l < k; ++l) {
      if (l == i || l == j) continue;
      const bool red = red_between(any, all, p[l]);
      merged_red += red;
      const std::size_t deg = s.red_degree[l] - s.red[i * k + l] - s.red[j * k + l] + red;
      worst = std::max(worst, deg);
    }
    return std::max(worst, merged_red);
  }

  static Partition merged(const Partition& p, std::size_t i, std::size_t j) {
    Partition child = p;
    child[i] |= child[j];
    child.erase(child.begin() + static_cast<std::ptrdiff_t>(j));
    return child;
  }

  // 4 bits per vertex: index of its part.
  std::uint64_t encode(const Partition& p) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (Mask rest = p[i]; rest; rest &= rest - 1) key |= std::uint64_t{i} << (4 * std::countr_zero(rest));
    return key;
  }

  VertexId n_;
  std::vector<Mask> nbr_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

}  // namespace

GeneratedSequence gen_exact(const EdgeList& g, VertexId max_n) {
  max_n = std::min(max_n, kExactHardMaxN);
  if (g.n == 0) throw SemanticError("graph must have at least one vertex");
  if (g.n > max_n) {
    throw SemanticError("exact search is limited to n <= " + std::to_string(max_n) + " (n = " +
                        std::to_string(g.n) + "); use the greedy strategy");
  }
  for (auto [a, b] : g.edges) {
    if (a < 1 || a > g.n || b < 1 || b > g.n) throw SemanticError("edge endpoint out of range");
    if (a == b) throw SemanticError("self-loop on vertex " + std::to_string(a));
  }
  ExactSearch search(g);
  return search.reconstruct();
}

}  // namespace twtri
