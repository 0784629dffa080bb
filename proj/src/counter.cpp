#include "twtri/counter.hpp"

#include <algorithm>

#include "twtri/oracle.hpp"

namespace twtri {

AuxValues AuxValues::initial(VertexId n) {
  AuxValues aux;
  const std::size_t slots = std::size_t{2} * n;
  aux.n_of.assign(slots, 0);
  aux.m_of.assign(slots, 0);
  for (VertexId x = 1; x <= n; ++x) aux.n_of[x] = 1;
  return aux;
}

Count AuxValues::e(VertexId x, VertexId y) const {
  auto it = e_of.find(key(x, y));
  if (it == e_of.end())
    throw InvariantViolation("missing e entry for red edge " + std::to_string(x) + "-" + std::to_string(y));
  return it->second;
}

bool is_counted(CaseTag c) {
  return c == CaseTag::OneBlack || c == CaseTag::ZeroBlack || c == CaseTag::EdgeRed || c == CaseTag::Inside;
}

const char* to_string(CaseTag c) {
  switch (c) {
    case CaseTag::ThreeBlack: return "(i)";
    case CaseTag::TwoBlack: return "(ii)";
    case CaseTag::OneBlack: return "(iii)";
    case CaseTag::ZeroBlack: return "(iv)";
    case CaseTag::EdgeBlack: return "(v)";
    case CaseTag::EdgeRed: return "(vi)";
    case CaseTag::Inside: return "(vii)";
  }
  return "?";
}

const char* to_string(Transition t) {
  switch (t) {
    case Transition::EdgeBlackToInside: return "v->vii";
    case Transition::EdgeBlackToEdgeRed: return "v->vi";
    case Transition::TwoBlackToEdgeRed: return "ii->vi";
    case Transition::TwoBlackToOneBlackViaRedNeighbor: return "ii->iii(red-neighbor)";
    case Transition::ThreeBlackToOneBlack: return "i->iii";
    case Transition::TwoBlackToOneBlack: return "ii->iii";
    case Transition::TwoBlackToZeroBlack: return "ii->iv";
  }
  return "?";
}

CaseTag transition_source(Transition t) {
  switch (t) {
    case Transition::EdgeBlackToInside:
    case Transition::EdgeBlackToEdgeRed: return CaseTag::EdgeBlack;
    case Transition::ThreeBlackToOneBlack: return CaseTag::ThreeBlack;
    default: return CaseTag::TwoBlack;
  }
}

CaseTag transition_target(Transition t) {
  switch (t) {
    case Transition::EdgeBlackToInside: return CaseTag::Inside;
    case Transition::EdgeBlackToEdgeRed:
    case Transition::TwoBlackToEdgeRed: return CaseTag::EdgeRed;
    case Transition::TwoBlackToZeroBlack: return CaseTag::ZeroBlack;
    default: return CaseTag::OneBlack;
  }
}

TriangleCounter::TriangleCounter(VertexId n, IncrementSink sink)
    : aux_(AuxValues::initial(n)), sink_(std::move(sink)), product_color_(std::size_t{2} * n, EdgeColor::None) {}

Count TriangleCounter::add(Count a, Count b) const {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("triangle count overflow");
  return r;
}

Count TriangleCounter::mul(Count a, Count b) const {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("triangle count overflow");
  return r;
}

void TriangleCounter::emit(Transition kind, std::initializer_list<VertexId> parts, Count amount) {
  if (!sink_ || amount == 0) return;
  Increment inc;
  inc.step = step_;
  inc.kind = kind;
  inc.part_count = static_cast<int>(parts.size());
  std::copy(parts.begin(), parts.end(), inc.parts.begin());
  inc.amount = amount;
  sink_(inc);
}

Count TriangleCounter::count_black_edge_collapse(VertexId u, VertexId v) {
  const Count inc = add(mul(aux_.n_of[u], aux_.m_of[v]), mul(aux_.n_of[v], aux_.m_of[u]));
  emit(Transition::EdgeBlackToInside, {u, v}, inc);
  return inc;
}

Count TriangleCounter::tri_count_one_neighbor(const ContractionPlan& plan, const PlanEntry& e) {
  ++counters_.one_neighbor_calls;
  const auto& n = aux_.n_of;
  const auto& m = aux_.m_of;
  const VertexId u = plan.u, v = plan.v, x = e.x;
  Count inc = 0;
  // At most one side can be black to x, otherwise {w,x} would stay black.
  if (e.to_u == EdgeColor::Black) {
    const Count edge = add(mul(n[u], m[x]), mul(n[x], m[u]));
    emit(Transition::EdgeBlackToEdgeRed, {u, x}, edge);
    inc = add(inc, edge);
    if (plan.uv == EdgeColor::Black && e.to_v == EdgeColor::Red) {
      const Count wedge = mul(aux_.e(v, x), n[u]);
      emit(Transition::TwoBlackToEdgeRed, {u, v, x}, wedge);
      inc = add(inc, wedge);
    }
  } else if (e.to_v == EdgeColor::Black) {
    const Count edge = add(mul(n[v], m[x]), mul(n[x], m[v]));
    emit(Transition::EdgeBlackToEdgeRed, {v, x}, edge);
    inc = add(inc, edge);
    if (plan.uv == EdgeColor::Black && e.to_u == EdgeColor::Red) {
      const Count wedge = mul(aux_.e(u, x), n[v]);
      emit(Transition::TwoBlackToEdgeRed, {u, v, x}, wedge);
      inc = add(inc, wedge);
    }
  }
  return inc;
}

void TriangleCounter::note_step_width(Count d_k) {
  counters_.pair_budget += d_k * d_k;
  counters_.width = std::max(counters_.width, d_k);
}

void TriangleCounter::mark_product(const ContractionPlan& plan) {
  red_entries_.clear();
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    const PlanEntry& e = plan.entries[i];
    product_color_[e.x] = e.merged();
    if (e.merged() == EdgeColor::Red) red_entries_.push_back(i);
  }
}

void TriangleCounter::clear_product(const ContractionPlan& plan) {
  for (const PlanEntry& e : plan.entries) product_color_[e.x] = EdgeColor::None;
}

Count TriangleCounter::tri_count_two_neighbors(const Trigraph& g, const ContractionPlan& plan) {
  const auto& n = aux_.n_of;
  const VertexId u = plan.u, v = plan.v;
  Count inc = 0;

  // x red to w, y black to w, {x,y} red: the part black to x supplies the
  // third corner of every original x-y edge.
  for (std::size_t i : red_entries_) {
    const PlanEntry& ex = plan.entries[i];
    const VertexId x = ex.x;
    VertexId side = kNoVertex;
    if (ex.to_u == EdgeColor::Black) side = u;
    else if (ex.to_v == EdgeColor::Black) side = v;
    if (side == kNoVertex) continue;
    for (VertexId y : g.red_neighbors(x)) {
      if (y == u || y == v) continue;
      ++counters_.red_wedge_visits;
      if (product_color_[y] != EdgeColor::Black) continue;
      const Count c = mul(aux_.e(x, y), n[side]);
      emit(Transition::TwoBlackToOneBlackViaRedNeighbor, {side, x, y}, c);
      inc = add(inc, c);
    }
  }

  // Unordered pairs {x,y} of red neighbors of w, each visited once; both
  // orientations of the asymmetric terms are evaluated inside the visit.
  for (std::size_t a = 0; a < red_entries_.size(); ++a) {
    const PlanEntry& ex = plan.entries[red_entries_[a]];
    for (std::size_t b = a + 1; b < red_entries_.size(); ++b) {
      const PlanEntry& ey = plan.entries[red_entries_[b]];
      ++counters_.two_neighbor_pair_visits;
      const VertexId x = ex.x, y = ey.x;
      const EdgeColor xy = g.color_unchecked(x, y);
      if (xy == EdgeColor::None) continue;

      for (int s = 0; s < 2; ++s) {
        const VertexId side = s == 0 ? u : v;
        const EdgeColor sx = s == 0 ? ex.to_u : ex.to_v;
        const EdgeColor sy = s == 0 ? ey.to_u : ey.to_v;
        if (xy == EdgeColor::Black) {
          if (sx == EdgeColor::Black && sy == EdgeColor::Black) {
            const Count c = mul(mul(n[side], n[x]), n[y]);
            emit(Transition::ThreeBlackToOneBlack, {side, x, y}, c);
            inc = add(inc, c);
          } else if (sx == EdgeColor::Red && sy == EdgeColor::Black) {
            const Count c = mul(aux_.e(side, x), n[y]);
            emit(Transition::TwoBlackToOneBlack, {side, x, y}, c);
            inc = add(inc, c);
          } else if (sx == EdgeColor::Black && sy == EdgeColor::Red) {
            const Count c = mul(aux_.e(side, y), n[x]);
            emit(Transition::TwoBlackToOneBlack, {side, y, x}, c);
            inc = add(inc, c);
          }
        } else if (sx == EdgeColor::Black && sy == EdgeColor::Black) {
          const Count c = mul(aux_.e(x, y), n[side]);
          emit(Transition::TwoBlackToZeroBlack, {side, x, y}, c);
          inc = add(inc, c);
        }
      }
    }
  }
  return inc;
}

void TriangleCounter::update_auxiliary_values(const ContractionPlan& plan, VertexId w) {
  auto& n = aux_.n_of;
  auto& m = aux_.m_of;
  const VertexId u = plan.u, v = plan.v;

  n[w] = n[u] + n[v];
  Count between = 0;
  if (plan.uv == EdgeColor::Black) between = mul(n[u], n[v]);
  else if (plan.uv == EdgeColor::Red) between = aux_.e(u, v);
  m[w] = add(add(m[u], m[v]), between);
  ++counters_.aux_updates;

  // Original edges between G^s and G^x for s in {u, v}: all of them when
  // black, the stored count when red, none otherwise. Summing both sides
  // covers every combination that leaves {w,x} red, including red on both.
  auto side_edges = [&](VertexId s, EdgeColor c, VertexId x) -> Count {
    if (c == EdgeColor::Black) return mul(n[s], n[x]);
    if (c == EdgeColor::Red) return aux_.e(s, x);
    return 0;
  };
  for (std::size_t i : red_entries_) {
    const PlanEntry& e = plan.entries[i];
    const Count ew = add(side_edges(u, e.to_u, e.x), side_edges(v, e.to_v, e.x));
    aux_.set_e(w, e.x, ew);
    ++counters_.aux_updates;
  }
  for (const PlanEntry& e : plan.entries) {
    if (e.to_u == EdgeColor::Red) counters_.aux_updates += aux_.erase_e(u, e.x);
    if (e.to_v == EdgeColor::Red) counters_.aux_updates += aux_.erase_e(v, e.x);
  }
  if (plan.uv == EdgeColor::Red) counters_.aux_updates += aux_.erase_e(u, v);
}

Count TriangleCounter::process(const Trigraph& g, const ContractionPlan& plan, VertexId w, std::size_t step) {
  step_ = step;
  ++counters_.contractions;
  mark_product(plan);

  Count inc = 0;
  if (plan.uv == EdgeColor::Black) inc = add(inc, count_black_edge_collapse(plan.u, plan.v));
  for (std::size_t i : red_entries_) inc = add(inc, tri_count_one_neighbor(plan, plan.entries[i]));
  inc = add(inc, tri_count_two_neighbors(g, plan));
  update_auxiliary_values(plan, w);

  clear_product(plan);
  total_ = add(total_, inc);
  return inc;
}

void check_conservation(const Trigraph& g, const AuxValues& aux, Count n, Count m) {
  Count vertex_mass = 0, edge_mass = 0;
  std::size_t red_seen = 0;
  for (VertexId x : g.live_vertices()) {
    vertex_mass += aux.n_of[x];
    edge_mass += aux.m_of[x];
    for (VertexId y : g.black_neighbors(x))
      if (x < y) edge_mass += aux.n_of[x] * aux.n_of[y];
    for (VertexId y : g.red_neighbors(x)) {
      if (x >= y) continue;
      ++red_seen;
      edge_mass += aux.e(x, y);
    }
  }
  if (vertex_mass != n)
    throw InvariantViolation("vertex mass " + std::to_string(vertex_mass) + " != n = " + std::to_string(n));
  if (edge_mass != m)
    throw InvariantViolation("edge mass " + std::to_string(edge_mass) + " != m = " + std::to_string(m));
  if (red_seen != aux.e_of.size())
    throw InvariantViolation("e entries " + std::to_string(aux.e_of.size()) + " for " + std::to_string(red_seen) +
                             " red edges");
}

bool evaluate_invariant(const Trigraph& g, const AuxValues& aux, Count t, Count original_triangles) {
  const auto live = g.live_vertices();
  const auto& n = aux.n_of;
  const auto& m = aux.m_of;
  const std::size_t k = live.size();
  std::vector<EdgeColor> color(k * k, EdgeColor::None);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      color[i * k + j] = color[j * k + i] = g.color_unchecked(live[i], live[j]);

  Count sum = t;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const EdgeColor cij = color[i * k + j];
      const VertexId x = live[i], y = live[j];
      if (cij == EdgeColor::Black) sum += n[x] * m[y] + m[x] * n[y];
      for (std::size_t l = j + 1; l < k; ++l) {
        const VertexId z = live[l];
        const EdgeColor cjl = color[j * k + l], cil = color[i * k + l];
        const int black = (cij == EdgeColor::Black) + (cjl == EdgeColor::Black) + (cil == EdgeColor::Black);
        const int red = (cij == EdgeColor::Red) + (cjl == EdgeColor::Red) + (cil == EdgeColor::Red);
        if (black == 3) {
          sum += n[x] * n[y] * n[z];
        } else if (black == 2 && red == 1) {
          // The red pair hides the edges, the remaining corner is the apex.
          if (cij == EdgeColor::Red) sum += aux.e(x, y) * n[z];
          else if (cjl == EdgeColor::Red) sum += aux.e(y, z) * n[x];
          else sum += aux.e(x, z) * n[y];
        }
      }
    }
  }
  return sum == original_triangles;
}

CaseTag classify_triangle(const Trigraph& g, VertexId a, VertexId b, VertexId c) {
  if (a == b && b == c) return CaseTag::Inside;
  if (a == b || b == c || a == c) {
    const VertexId lone = (a == b) ? c : (b == c ? a : b);
    const VertexId pair = (a == b) ? a : (b == c ? b : a);
    const EdgeColor col = g.edge_color(lone, pair);
    if (col == EdgeColor::None) throw InvariantViolation("triangle split over non-adjacent parts");
    return col == EdgeColor::Black ? CaseTag::EdgeBlack : CaseTag::EdgeRed;
  }
  int black = 0;
  for (auto [p, q] : {std::pair{a, b}, std::pair{b, c}, std::pair{a, c}}) {
    const EdgeColor col = g.edge_color(p, q);
    if (col == EdgeColor::None) throw InvariantViolation("triangle split over non-adjacent parts");
    black += col == EdgeColor::Black;
  }
  switch (black) {
    case 3: return CaseTag::ThreeBlack;
    case 2: return CaseTag::TwoBlack;
    case 1: return CaseTag::OneBlack;
    default: return CaseTag::ZeroBlack;
  }
}

namespace {

class CountingObserver : public ReplayObserver {
 public:
  CountingObserver(const EdgeList& graph, const CountOptions& options, Count original_edges)
      : options_(options),
        counter_(graph.n, options.on_increment),
        n_(graph.n),
        m_(original_edges) {
    if (options.mode == CountOptions::Mode::Checked) {
      oracle_count_ = oracle::count_naive(oracle::PlainGraph::from_edges(graph));
    }
  }

  void before_contraction(const Trigraph& g, const StepInfo& step, const ContractionPlan& plan) override {
    d_before_ = g.max_red_degree();
    counter_.process(g, plan, step.w, step.index);
  }

  void after_contraction(const Trigraph& g, const StepInfo& step) override {
    const Count d = std::max<Count>(d_before_, g.max_red_degree());
    counter_.note_step_width(d);
    const CountCounters& c = counter_.counters();

    const bool checked = options_.mode == CountOptions::Mode::Checked;
    if (checked) {
      if (c.one_neighbor_calls - last_.one_neighbor_calls > d)
        throw InvariantViolation("step " + std::to_string(step.index) + ": one-neighbor calls exceed d_k");
      if (c.two_neighbor_pair_visits - last_.two_neighbor_pair_visits > d * d)
        throw InvariantViolation("step " + std::to_string(step.index) + ": pair visits exceed d_k^2");
      last_ = c;
    }
    if (checked || options_.check_conservation) check_conservation(g, counter_.aux(), n_, m_);
    if (checked && !evaluate_invariant(g, counter_.aux(), counter_.total(), oracle_count_)) {
      throw InvariantViolation("loop invariant broken after step " + std::to_string(step.index) + " (" +
                               std::to_string(step.u) + "," + std::to_string(step.v) + ")->" +
                               std::to_string(step.w));
    }
    if (options_.on_step) options_.on_step(g, counter_.aux(), counter_.total(), step);
  }

  const TriangleCounter& counter() const { return counter_; }

 private:
  const CountOptions& options_;
  TriangleCounter counter_;
  Count n_;
  Count m_;
  Count oracle_count_ = 0;
  std::size_t d_before_ = 0;
  CountCounters last_;
};

}  // namespace

CountResult count_triangles(const EdgeList& graph, const CompactSequence& seq, const CountOptions& options) {
  const bool checked = options.mode == CountOptions::Mode::Checked;
  if (checked && graph.n > options.checked_max_n) {
    throw SemanticError("checked mode is limited to n <= " + std::to_string(options.checked_max_n) + " (n = " +
                        std::to_string(graph.n) + ")");
  }
  Trigraph g = Trigraph::from_graph(graph);
  CountingObserver observer(graph, options, g.black_edge_count());
  if (checked) {
    g.check_consistency();
    if (!evaluate_invariant(g, observer.counter().aux(), 0, oracle::count_naive(oracle::PlainGraph::from_edges(graph))))
      throw InvariantViolation("loop invariant broken on the input graph");
  }
  if (checked || options.check_conservation) check_conservation(g, observer.counter().aux(), graph.n, g.black_edge_count());

  const SequenceReport report = replay(g, seq, &observer);
  if (!report.valid) throw SemanticError("invalid sequence: " + report.message);
  if (checked) g.check_consistency();

  CountResult result;
  result.triangles = observer.counter().total();
  result.counters = observer.counter().counters();
  result.counters.graph_update_work = g.update_work();
  result.steps = seq.pairs.size();
  return result;
}

}  // namespace twtri
