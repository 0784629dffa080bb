#include "twtri/trigraph.hpp"

#include <algorithm>
#include <sstream>

namespace twtri {

std::size_t ContractionPlan::product_red_degree() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const PlanEntry& e) { return e.merged() == EdgeColor::Red; }));
}

std::size_t ContractionPlan::product_black_degree() const { return entries.size() - product_red_degree(); }

Trigraph Trigraph::from_graph(const EdgeList& g) {
  Trigraph t;
  const VertexId n = g.n;
  if (n == 0) throw SemanticError("graph must have at least one vertex");
  const std::size_t slots = std::size_t{2} * n;  // ids 1..2n-1
  t.n_ = n;
  t.live_count_ = n;
  t.alive_.assign(slots, 0);
  for (VertexId v = 1; v <= n; ++v) t.alive_[v] = 1;
  t.black_.resize(slots);
  t.red_.resize(slots);
  t.black_deg_.assign(slots, 0);
  t.red_deg_.assign(slots, 0);
  t.black_stale_.assign(slots, 0);
  t.red_stale_.assign(slots, 0);
  t.red_hist_.assign(static_cast<std::size_t>(n) + 1, 0);
  t.red_hist_[0] = n;

  // Bucket directed arcs by head, then distribute by tail: every tail list
  // comes out sorted by head without a comparison sort.
  std::vector<std::size_t> start(static_cast<std::size_t>(n) + 2, 0);
  for (auto [a, b] : g.edges) {
    if (a < 1 || a > n || b < 1 || b > n) throw SemanticError("edge endpoint out of range");
    if (a == b) throw SemanticError("self-loop on vertex " + std::to_string(a));
    ++start[a + 1];
    ++start[b + 1];
  }
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  std::vector<VertexId> tails(start.back());
  {
    auto fill = start;
    for (auto [a, b] : g.edges) {
      tails[fill[b]++] = a;
      tails[fill[a]++] = b;
    }
  }
  for (VertexId head = 1; head <= n; ++head) {
    for (std::size_t i = start[head]; i < start[head + 1]; ++i) {
      auto& list = t.black_[tails[i]];
      if (list.empty() || list.back() != head) list.push_back(head);
    }
  }
  std::size_t arcs = 0;
  for (VertexId v = 1; v <= n; ++v) {
    t.black_deg_[v] = static_cast<std::uint32_t>(t.black_[v].size());
    arcs += t.black_[v].size();
  }
  t.black_edges_ = arcs / 2;
  return t;
}

std::vector<VertexId> Trigraph::live_vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_count_);
  for (VertexId v = 1; v < alive_.size(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

void Trigraph::require_live(VertexId v, const char* what) const {
  if (!is_live(v)) throw SemanticError(std::string(what) + ": vertex " + std::to_string(v) + " is not live");
}

EdgeColor Trigraph::color_unchecked(VertexId u, VertexId v) const {
  const auto& b = black_[u];
  if (std::binary_search(b.begin(), b.end(), v)) return EdgeColor::Black;
  const auto& r = red_[u];
  if (std::binary_search(r.begin(), r.end(), v)) return EdgeColor::Red;
  return EdgeColor::None;
}

EdgeColor Trigraph::edge_color(VertexId u, VertexId v) const {
  require_live(u, "edge_color");
  require_live(v, "edge_color");
  if (u == v) throw SemanticError("edge_color: identical endpoints " + std::to_string(u));
  // Search the shorter list pair.
  if (black_[u].size() + red_[u].size() > black_[v].size() + red_[v].size()) std::swap(u, v);
  return color_unchecked(u, v);
}

std::size_t Trigraph::red_degree(VertexId v) const {
  require_live(v, "red_degree");
  return red_deg_[v];
}

std::size_t Trigraph::black_degree(VertexId v) const {
  require_live(v, "black_degree");
  return black_deg_[v];
}

namespace {

// Merges the live entries of a vertex's black and red lists into one list of
// (neighbor, color), sorted by neighbor, skipping `skip`.
void colored_neighbors(const std::vector<VertexId>& black, const std::vector<VertexId>& red,
                       const std::vector<char>& alive, VertexId skip,
                       std::vector<std::pair<VertexId, EdgeColor>>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < black.size() || j < red.size()) {
    const bool take_black = j == red.size() || (i < black.size() && black[i] < red[j]);
    const VertexId x = take_black ? black[i++] : red[j++];
    if (!alive[x] || x == skip) continue;
    out.emplace_back(x, take_black ? EdgeColor::Black : EdgeColor::Red);
  }
}

}  // namespace

void Trigraph::plan_contraction(VertexId u, VertexId v, ContractionPlan& out) const {
  require_live(u, "contract");
  require_live(v, "contract");
  if (u == v) throw SemanticError("contract: cannot contract vertex " + std::to_string(u) + " with itself");

  out.u = u;
  out.v = v;
  out.uv = color_unchecked(u, v);
  out.generation = contractions_;
  out.entries.clear();
  out.scanned = black_[u].size() + red_[u].size() + black_[v].size() + red_[v].size();

  thread_local std::vector<std::pair<VertexId, EdgeColor>> nu, nv;
  colored_neighbors(black_[u], red_[u], alive_, v, nu);
  colored_neighbors(black_[v], red_[v], alive_, u, nv);

  std::size_t i = 0, j = 0;
  while (i < nu.size() || j < nv.size()) {
    PlanEntry e;
    if (j == nv.size() || (i < nu.size() && nu[i].first < nv[j].first)) {
      e.x = nu[i].first;
      e.to_u = nu[i++].second;
    } else if (i == nu.size() || nv[j].first < nu[i].first) {
      e.x = nv[j].first;
      e.to_v = nv[j++].second;
    } else {
      e.x = nu[i].first;
      e.to_u = nu[i++].second;
      e.to_v = nv[j++].second;
    }
    out.entries.push_back(e);
  }
}

ContractionPlan Trigraph::plan_contraction(VertexId u, VertexId v) const {
  ContractionPlan plan;
  plan_contraction(u, v, plan);
  return plan;
}

void Trigraph::set_red_degree(VertexId v, std::size_t deg) {
  const std::size_t old = red_deg_[v];
  --red_hist_[old];
  ++red_hist_[deg];
  red_deg_[v] = static_cast<std::uint32_t>(deg);
  if (deg > max_red_) max_red_ = deg;
  while (max_red_ > 0 && red_hist_[max_red_] == 0) --max_red_;
}

void Trigraph::maybe_compact(VertexId x) {
  auto compact = [&](std::vector<VertexId>& list, std::uint32_t& stale) {
    if (stale * 2 <= list.size() || list.size() < 4) return;
    std::erase_if(list, [&](VertexId y) { return alive_[y] == 0; });
    update_work_ += list.size();
    stale = 0;
  };
  compact(black_[x], black_stale_[x]);
  compact(red_[x], red_stale_[x]);
}

void Trigraph::apply(const ContractionPlan& plan, VertexId w) {
  const VertexId u = plan.u;
  const VertexId v = plan.v;
  require_live(u, "contract");
  require_live(v, "contract");
  if (plan.generation != contractions_) throw SemanticError("contract: stale contraction plan");
  if (w != next_id()) {
    throw SemanticError("contract: new vertex must be " + std::to_string(next_id()) + ", got " +
                        std::to_string(w));
  }

  update_work_ += plan.scanned;

  // Edges incident to u or v disappear; the uv edge is counted once.
  black_edges_ -= black_deg_[u] + black_deg_[v];
  red_edges_ -= red_deg_[u] + red_deg_[v];
  if (plan.uv == EdgeColor::Black) ++black_edges_;
  if (plan.uv == EdgeColor::Red) ++red_edges_;

  alive_[u] = 0;
  alive_[v] = 0;
  alive_[w] = 1;
  --live_count_;
  ++red_hist_[0];  // w enters with red degree 0, adjusted below
  set_red_degree(u, 0);
  set_red_degree(v, 0);
  red_hist_[0] -= 2;

  auto& wb = black_[w];
  auto& wr = red_[w];
  for (const PlanEntry& e : plan.entries) {
    const VertexId x = e.x;
    std::size_t red_x = red_deg_[x];
    for (EdgeColor c : {e.to_u, e.to_v}) {
      if (c == EdgeColor::Black) {
        --black_deg_[x];
        ++black_stale_[x];
      } else if (c == EdgeColor::Red) {
        --red_x;
        ++red_stale_[x];
      }
    }
    // w exceeds every id present, so appending keeps the lists sorted.
    if (e.merged() == EdgeColor::Black) {
      black_[x].push_back(w);
      ++black_deg_[x];
      wb.push_back(x);
      ++black_edges_;
    } else {
      red_[x].push_back(w);
      ++red_x;
      wr.push_back(x);
      ++red_edges_;
    }
    update_work_ += 2;
    set_red_degree(x, red_x);
    maybe_compact(x);
  }
  black_deg_[w] = static_cast<std::uint32_t>(wb.size());
  set_red_degree(w, wr.size());

  std::vector<VertexId>().swap(black_[u]);
  std::vector<VertexId>().swap(red_[u]);
  std::vector<VertexId>().swap(black_[v]);
  std::vector<VertexId>().swap(red_[v]);
  black_deg_[u] = black_deg_[v] = 0;
  black_stale_[u] = black_stale_[v] = red_stale_[u] = red_stale_[v] = 0;
  ++contractions_;
}

VertexId Trigraph::contract(VertexId u, VertexId v) {
  const VertexId w = next_id();
  contract(u, v, w);
  return w;
}

void Trigraph::contract(VertexId u, VertexId v, VertexId w) {
  if (w != next_id()) {
    throw SemanticError("contract: new vertex must be " + std::to_string(next_id()) + ", got " +
                        std::to_string(w));
  }
  ContractionPlan plan;
  plan_contraction(u, v, plan);
  apply(plan, w);
}

void Trigraph::check_consistency() const {
  auto fail = [](const std::string& msg) { throw InvariantViolation("trigraph: " + msg); };
  std::size_t live = 0, black_arcs = 0, red_arcs = 0, max_red = 0;
  std::vector<std::size_t> hist(red_hist_.size(), 0);
  for (VertexId x = 1; x < alive_.size(); ++x) {
    if (!alive_[x]) {
      if (!black_[x].empty() || !red_[x].empty()) fail("dead vertex " + std::to_string(x) + " keeps adjacency");
      continue;
    }
    if (x >= next_id()) fail("live vertex " + std::to_string(x) + " beyond next id");
    ++live;
    std::size_t deg[2] = {0, 0};
    std::uint32_t stale[2] = {0, 0};
    const std::vector<VertexId>* lists[2] = {&black_[x], &red_[x]};
    for (int k = 0; k < 2; ++k) {
      const auto& list = *lists[k];
      for (std::size_t i = 0; i < list.size(); ++i) {
        const VertexId y = list[i];
        if (i > 0 && list[i - 1] >= y) fail("list of " + std::to_string(x) + " not strictly sorted");
        if (y == x) fail("self-loop at " + std::to_string(x));
        if (y == 0 || y >= next_id()) fail("unknown id in list of " + std::to_string(x));
        if (!alive_[y]) {
          ++stale[k];
          continue;
        }
        ++deg[k];
        const auto& back = *(k == 0 ? &black_[y] : &red_[y]);
        if (!std::binary_search(back.begin(), back.end(), x))
          fail("asymmetric edge " + std::to_string(x) + "-" + std::to_string(y));
        const auto& other = *(k == 0 ? &red_[x] : &black_[x]);
        if (std::binary_search(other.begin(), other.end(), y))
          fail("edge " + std::to_string(x) + "-" + std::to_string(y) + " is both black and red");
      }
    }
    if (deg[0] != black_deg_[x] || deg[1] != red_deg_[x]) fail("degree counter mismatch at " + std::to_string(x));
    if (stale[0] != black_stale_[x] || stale[1] != red_stale_[x])
      fail("tombstone counter mismatch at " + std::to_string(x));
    black_arcs += deg[0];
    red_arcs += deg[1];
    max_red = std::max(max_red, deg[1]);
    ++hist[deg[1]];
  }
  if (live != live_count_) fail("live count mismatch");
  if (black_arcs != 2 * black_edges_ || red_arcs != 2 * red_edges_) fail("edge count mismatch");
  if (max_red != max_red_) fail("max red degree mismatch");
  if (hist != red_hist_) fail("red degree histogram mismatch");
}

std::string Trigraph::serialize() const {
  std::ostringstream out;
  out << "trigraph " << n_ << ' ' << contractions_ << '\n';
  for (VertexId x : live_vertices()) {
    out << x << " b";
    for (VertexId y : black_neighbors(x)) out << ' ' << y;
    out << " r";
    for (VertexId y : red_neighbors(x)) out << ' ' << y;
    out << '\n';
  }
  return out.str();
}

}  // namespace twtri
