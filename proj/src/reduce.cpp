#include "fastmis/reduce.hpp"

#include <algorithm>
#include <sstream>

#include "fastmis/lp_relaxation.hpp"

namespace fastmis {

// ---------------------------------------------------------------------------
// ReductionStack

namespace {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

void ReductionStack::push(ReductionEntry entry) {
  auto bump = [&](Vertex v) { max_id_ = std::max(max_id_, v); };
  std::visit(Overloaded{
                 [&](const IncludeVertex& e) {
                   bump(e.v);
                   ++offset_;
                 },
                 [&](const ExcludeVertex& e) { bump(e.v); },
                 [&](const FoldRecord& e) {
                   for (Vertex v : {e.folded, e.center, e.u, e.w}) bump(v);
                   ++offset_;
                 },
                 [&](const TwinRecord& e) {
                   for (Vertex v : {e.gadget, e.u, e.v}) bump(v);
                   for (Vertex v : e.neighborhood) bump(v);
                   offset_ += 2;
                 },
                 [&](const AlternativeRecord& e) {
                   for (const auto* side : {&e.a, &e.b, &e.a_side, &e.b_side})
                     for (Vertex v : *side) bump(v);
                   offset_ += e.a.size();
                 },
             },
             entry);
  entries_.push_back(std::move(entry));
}

std::vector<Vertex> ReductionStack::lift(std::span<const Vertex> kernel_solution,
                                         std::size_t original_n) const {
  std::size_t bound = std::max<std::size_t>(original_n, static_cast<std::size_t>(max_id_) + 1);
  for (Vertex v : kernel_solution) bound = std::max<std::size_t>(bound, static_cast<std::size_t>(v) + 1);
  std::vector<char> in(bound, 0);
  for (Vertex v : kernel_solution) in[v] = 1;

  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    std::visit(Overloaded{
                   [&](const IncludeVertex& e) { in[e.v] = 1; },
                   [&](const ExcludeVertex& e) {
                     require(!in[e.v], "lift: excluded vertex appears in the solution");
                   },
                   [&](const FoldRecord& e) {
                     if (in[e.folded]) {
                       in[e.folded] = 0;
                       in[e.u] = in[e.w] = 1;
                     } else {
                       in[e.center] = 1;
                     }
                   },
                   [&](const TwinRecord& e) {
                     if (in[e.gadget]) {
                       in[e.gadget] = 0;
                       for (Vertex x : e.neighborhood) in[x] = 1;
                     } else {
                       in[e.u] = in[e.v] = 1;
                     }
                   },
                   [&](const AlternativeRecord& e) {
                     bool a_blocked = std::any_of(e.a_side.begin(), e.a_side.end(),
                                                  [&](Vertex x) { return in[x] != 0; });
                     for (Vertex x : a_blocked ? e.b : e.a) in[x] = 1;
                   },
               },
               *it);
  }

  std::vector<Vertex> out;
  for (Vertex v = 0; v < original_n; ++v)
    if (in[v]) out.push_back(v);
  for (Vertex v = static_cast<Vertex>(original_n); v < bound; ++v)
    require(!in[v], "lift: gadget vertex survived the replay");
  return out;
}

// ---------------------------------------------------------------------------
// RuleSet

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Pendant: return "pendant";
    case Rule::Isolated: return "isolated";
    case Rule::Fold: return "fold";
    case Rule::Lp: return "lp";
    case Rule::Unconfined: return "unconfined";
    case Rule::Twin: return "twin";
    case Rule::Alternative: return "alternative";
    case Rule::Packing: return "packing";
  }
  return "?";
}

RuleSet RuleSet::parse(const std::string& text) {
  if (text == "all") return all();
  if (text == "akiba-iwata") return akiba_iwata();
  if (text == "none" || text.empty()) return none();
  RuleSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool found = false;
    for (Rule r : kRuleOrder)
      if (item == rule_name(r)) {
        out = out.with(r);
        found = true;
      }
    if (!found) throw ParseError("unknown reduction rule '" + item + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reducer

Reducer::Reducer(Graph& g, ReductionStack& stack) : g_(g), stack_(stack) { ensure_capacity(); }

void Reducer::ensure_capacity() {
  const std::size_t n = g_.id_bound();
  if (mark_.size() < n) {
    mark_.resize(n, 0);
    count_.resize(n, 0);
    occurrences_.resize(n);
  }
}

std::uint32_t Reducer::next_epoch() {
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  return epoch_;
}

void Reducer::note_included(Vertex v) {
  for (std::size_t cid : occurrences_[v]) {
    auto& c = constraints_[cid];
    if (!c.active) continue;
    c.vars.erase(std::remove(c.vars.begin(), c.vars.end(), v), c.vars.end());
    if (c.vars.empty() || c.bound >= static_cast<long>(c.vars.size())) c.active = false;
    else if (c.bound == 0) ready_.push_back(cid);
  }
  occurrences_[v].clear();
}

void Reducer::note_excluded(Vertex v) {
  for (std::size_t cid : occurrences_[v]) {
    auto& c = constraints_[cid];
    if (!c.active) continue;
    c.vars.erase(std::remove(c.vars.begin(), c.vars.end(), v), c.vars.end());
    --c.bound;
    if (c.bound < 0 || c.vars.empty() || c.bound >= static_cast<long>(c.vars.size())) c.active = false;
    else if (c.bound == 0) ready_.push_back(cid);
  }
  occurrences_[v].clear();
}

void Reducer::note_consumed(Vertex v) {
  for (std::size_t cid : occurrences_[v]) constraints_[cid].active = false;
  occurrences_[v].clear();
}

void Reducer::add_constraint(std::vector<Vertex> vars, long bound) {
  ensure_capacity();
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.empty() || bound < 0 || bound >= static_cast<long>(vars.size())) return;
  for (Vertex v : vars) require(g_.alive(v), "packing constraint over a dead vertex");
  std::size_t cid = constraints_.size();
  for (Vertex v : vars) occurrences_[v].push_back(cid);
  constraints_.push_back({std::move(vars), bound, true});
  if (bound == 0) ready_.push_back(cid);
}

void Reducer::include(Vertex v) {
  stack_.push(IncludeVertex{v});
  note_included(v);
  std::vector<Vertex> nbrs = g_.neighbors_live(v);
  g_.remove_vertex(v);
  touched_.push_back(v);
  for (Vertex u : nbrs) {
    stack_.push(ExcludeVertex{u});
    note_excluded(u);
    g_.remove_vertex(u);
    touched_.push_back(u);
  }
}

void Reducer::exclude(Vertex v) {
  stack_.push(ExcludeVertex{v});
  note_excluded(v);
  g_.remove_vertex(v);
  touched_.push_back(v);
}

bool Reducer::is_simplicial(Vertex v) {
  const std::size_t d = g_.degree(v);
  if (d <= 1) return true;
  const std::uint32_t e = next_epoch();
  mark_[v] = e;
  g_.for_each_live_neighbor(v, [&](Vertex u) { mark_[u] = e; });
  bool ok = true;
  g_.for_each_live_neighbor(v, [&](Vertex u) {
    if (!ok) return;
    if (g_.degree(u) < d) {
      ok = false;
      return;
    }
    std::size_t inside = 0;
    g_.for_each_live_neighbor(u, [&](Vertex x) { inside += mark_[x] == e; });
    ok = inside == d;  // the other d - 1 neighbors plus v
  });
  return ok;
}

namespace {
// Pops vertex ids until the queue is empty; the queue may grow while draining.
template <typename F>
void drain(std::vector<Vertex>& queue, F&& f) {
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    f(v);
  }
}
}  // namespace

std::size_t Reducer::pendant() {
  std::size_t applied = 0;
  std::vector<Vertex> queue;
  for (Vertex v : g_.alive_vertices())
    if (g_.degree(v) <= 1) queue.push_back(v);
  std::reverse(queue.begin(), queue.end());
  drain(queue, [&](Vertex v) {
    if (!g_.alive(v) || g_.degree(v) > 1) return;
    touched_.clear();
    include(v);
    ++applied;
    for (Vertex r : touched_)
      for (Vertex x : g_.adjacency(r))
        if (g_.alive(x) && g_.degree(x) <= 1) queue.push_back(x);
  });
  return applied;
}

std::size_t Reducer::isolated(std::size_t max_degree) {
  std::size_t applied = 0;
  std::vector<Vertex> queue;
  for (Vertex v : g_.alive_vertices())
    if (g_.degree(v) <= max_degree) queue.push_back(v);
  std::reverse(queue.begin(), queue.end());
  drain(queue, [&](Vertex v) {
    if (!g_.alive(v) || g_.degree(v) > max_degree || !is_simplicial(v)) return;
    touched_.clear();
    include(v);
    ++applied;
    for (Vertex r : touched_)
      for (Vertex x : g_.adjacency(r))
        if (g_.alive(x) && g_.degree(x) <= max_degree) queue.push_back(x);
  });
  return applied;
}

std::size_t Reducer::fold() {
  std::size_t applied = 0;
  std::vector<Vertex> queue;
  for (Vertex v : g_.alive_vertices())
    if (g_.degree(v) == 2) queue.push_back(v);
  std::reverse(queue.begin(), queue.end());
  drain(queue, [&](Vertex v) {
    if (!g_.alive(v) || g_.degree(v) != 2) return;
    auto nbrs = g_.neighbors_live(v);
    Vertex u = nbrs[0], w = nbrs[1];
    if (g_.adjacent(u, w)) return;
    for (Vertex x : {v, u, w}) note_consumed(x);
    Vertex folded = g_.contract_fold(v, u, w);
    ensure_capacity();
    stack_.push(FoldRecord{folded, v, u, w});
    ++applied;
    if (g_.degree(folded) == 2) queue.push_back(folded);
    g_.for_each_live_neighbor(folded, [&](Vertex x) {
      if (g_.degree(x) == 2) queue.push_back(x);
    });
  });
  return applied;
}

std::size_t Reducer::lp(bool minimize_half_part) {
  if (g_.alive_count() == 0) return 0;
  HalfIntegralSolution x = solve_lp_relaxation(g_, minimize_half_part);
  std::size_t applied = 0;
  for (Vertex v = 0; v < x.twice_value.size(); ++v) {
    if (x.twice_value[v] == 2 && g_.alive(v)) {
      include(v);
      ++applied;
    }
  }
  for (Vertex v = 0; v < x.twice_value.size(); ++v) {
    if (x.twice_value[v] == 0 && g_.alive(v)) {
      exclude(v);
      ++applied;
    }
  }
  touched_.clear();
  return applied;
}

bool Reducer::is_unconfined(Vertex v) {
  // S grows by one vertex per round; count_[x] = |N(x) ∩ S|. mark_ flags S.
  const std::uint32_t in_s = next_epoch();
  std::vector<Vertex> frontier;  // N(S): vertices with count_ > 0
  std::vector<Vertex> counted;
  auto add_to_s = [&](Vertex s) {
    mark_[s] = in_s;
    g_.for_each_live_neighbor(s, [&](Vertex y) {
      if (count_[y]++ == 0) {
        counted.push_back(y);
        frontier.push_back(y);
      }
    });
  };
  auto in_closed_s = [&](Vertex y) { return mark_[y] == in_s || count_[y] > 0; };

  add_to_s(v);
  bool result = false;
  while (true) {
    Vertex best_u = kNoVertex, best_w = kNoVertex;
    std::size_t best_outside = static_cast<std::size_t>(-1);
    for (Vertex u : frontier) {
      if (count_[u] != 1 || mark_[u] == in_s) continue;
      std::size_t outside = 0;
      Vertex w = kNoVertex;
      for (Vertex y : g_.adjacency(u)) {
        if (!g_.alive(y) || in_closed_s(y)) continue;
        ++outside;
        w = y;
        if (outside > best_outside) break;
      }
      if (outside < best_outside || (outside == best_outside && u < best_u)) {
        best_outside = outside;
        best_u = u;
        best_w = w;
      }
    }
    if (best_u == kNoVertex) break;  // confined
    if (best_outside == 0) {
      result = true;
      break;
    }
    if (best_outside != 1) break;
    add_to_s(best_w);
  }
  for (Vertex y : counted) count_[y] = 0;
  return result;
}

std::size_t Reducer::unconfined() {
  std::size_t applied = 0;
  for (Vertex v : g_.alive_vertices()) {
    if (!g_.alive(v) || !is_unconfined(v)) continue;
    std::vector<Vertex> nbrs = g_.neighbors_live(v);
    exclude(v);
    ++applied;
    // Some vertex of N(v) is in every optimum of the remaining graph.
    long bound = static_cast<long>(nbrs.size()) - 1;
    if (!nbrs.empty()) add_constraint(std::move(nbrs), bound);
  }
  touched_.clear();
  return applied;
}

std::size_t Reducer::twin() {
  std::size_t applied = 0;
  while (true) {
    struct Keyed {
      std::array<Vertex, 3> nbrs;
      Vertex v;
    };
    std::vector<Keyed> deg3;
    for (Vertex v : g_.alive_vertices()) {
      if (g_.degree(v) != 3) continue;
      auto n = g_.neighbors_live(v);
      deg3.push_back({{n[0], n[1], n[2]}, v});
    }
    std::sort(deg3.begin(), deg3.end(), [](const Keyed& a, const Keyed& b) {
      return a.nbrs != b.nbrs ? a.nbrs < b.nbrs : a.v < b.v;
    });
    std::size_t round = 0;
    for (std::size_t i = 0; i + 1 < deg3.size(); ++i) {
      if (deg3[i].nbrs != deg3[i + 1].nbrs) continue;
      Vertex u = deg3[i].v, v = deg3[i + 1].v;
      if (!g_.alive(u) || !g_.alive(v) || g_.degree(u) != 3 || g_.degree(v) != 3) continue;
      auto nu = g_.neighbors_live(u);
      if (nu != g_.neighbors_live(v)) continue;
      bool has_edge = g_.adjacent(nu[0], nu[1]) || g_.adjacent(nu[0], nu[2]) || g_.adjacent(nu[1], nu[2]);
      if (has_edge) {
        include(u);
        include(v);
      } else {
        const std::uint32_t e = next_epoch();
        mark_[u] = mark_[v] = e;
        for (Vertex x : nu) mark_[x] = e;
        std::vector<Vertex> two_hop;
        for (Vertex x : nu)
          g_.for_each_live_neighbor(x, [&](Vertex y) {
            if (mark_[y] != e) {
              mark_[y] = e;
              two_hop.push_back(y);
            }
          });
        for (Vertex x : {u, v, nu[0], nu[1], nu[2]}) {
          note_consumed(x);
          g_.remove_vertex(x);
        }
        Vertex gadget = g_.add_gadget(two_hop);
        ensure_capacity();
        stack_.push(TwinRecord{gadget, u, v, {nu[0], nu[1], nu[2]}});
      }
      ++round;
      ++i;
    }
    touched_.clear();
    applied += round;
    if (round == 0) break;
  }
  return applied;
}

void Reducer::apply_alternative(std::vector<Vertex> a, std::vector<Vertex> b) {
  const std::uint32_t in_a = next_epoch();
  for (Vertex x : a) mark_[x] = in_a;
  const std::uint32_t in_b = next_epoch();
  for (Vertex x : b) mark_[x] = in_b;

  // count_ bit 1: neighbor of A, bit 2: neighbor of B (outside A and B).
  std::vector<Vertex> seen;
  auto collect = [&](const std::vector<Vertex>& side, std::uint32_t bit) {
    for (Vertex s : side)
      g_.for_each_live_neighbor(s, [&](Vertex y) {
        if (mark_[y] == in_a || mark_[y] == in_b) return;
        if (count_[y] == 0) seen.push_back(y);
        count_[y] |= bit;
      });
  };
  collect(a, 1);
  collect(b, 2);

  AlternativeRecord rec;
  std::vector<Vertex> common;
  for (Vertex y : seen) {
    if (count_[y] == 3) common.push_back(y);
    else if (count_[y] == 1) rec.a_side.push_back(y);
    else rec.b_side.push_back(y);
    count_[y] = 0;
  }
  std::sort(rec.a_side.begin(), rec.a_side.end());
  std::sort(rec.b_side.begin(), rec.b_side.end());

  for (const auto* group : {&a, &b, &common})
    for (Vertex x : *group) {
      note_consumed(x);
      g_.remove_vertex(x);
    }
  for (Vertex x : rec.a_side)
    for (Vertex y : rec.b_side)
      if (!g_.adjacent(x, y)) {
        g_.add_edge(x, y);
        rec.added_edges.emplace_back(std::min(x, y), std::max(x, y));
      }
  rec.a = std::move(a);
  rec.b = std::move(b);
  stack_.push(std::move(rec));
}

bool Reducer::alternative_funnel(Vertex v) {
  const std::size_t d = g_.degree(v);
  if (d == 0) return false;
  auto nbrs = g_.neighbors_live(v);
  const std::uint32_t e = next_epoch();
  for (Vertex x : nbrs) mark_[x] = e;
  // count_[x] = |N(x) ∩ N(v)|
  std::vector<Vertex> not_full;
  for (Vertex x : nbrs) {
    std::uint32_t c = 0;
    g_.for_each_live_neighbor(x, [&](Vertex y) { c += mark_[y] == e; });
    count_[x] = c;
    if (c + 1 < d) not_full.push_back(x);
  }
  auto funnel_with = [&](Vertex u) {
    for (Vertex x : nbrs) {
      if (x == u) continue;
      std::uint32_t c = count_[x] - (g_.adjacent(x, u) ? 1u : 0u);
      if (c + 2 != d) return false;
    }
    return true;
  };
  Vertex chosen = kNoVertex;
  if (not_full.empty()) {
    chosen = nbrs.front();
  } else {
    // Every missing edge of G[N(v)] must touch u, so u is not_full[0] or one
    // of its non-neighbors inside N(v).
    Vertex x0 = not_full.front();
    if (funnel_with(x0)) {
      chosen = x0;
    } else {
      for (Vertex y : nbrs)
        if (y != x0 && !g_.adjacent(x0, y)) {
          if (funnel_with(y)) chosen = y;
          break;
        }
    }
  }
  for (Vertex x : nbrs) count_[x] = 0;
  if (chosen == kNoVertex) return false;
  apply_alternative({chosen}, {v});
  return true;
}

bool Reducer::alternative_four_cycle(Vertex a1) {
  auto deg_ok = [&](Vertex x) { return g_.degree(x) >= 3 && g_.degree(x) <= 4; };
  if (!deg_ok(a1)) return false;
  auto n1 = g_.neighbors_live(a1);
  for (std::size_t i = 0; i < n1.size(); ++i) {
    Vertex b1 = n1[i];
    if (!deg_ok(b1)) continue;
    for (std::size_t j = i + 1; j < n1.size(); ++j) {
      Vertex b2 = n1[j];
      if (!deg_ok(b2) || g_.adjacent(b1, b2)) continue;
      for (Vertex a2 : g_.neighbors_live(b1)) {
        if (a2 == a1 || !deg_ok(a2) || !g_.adjacent(a2, b2) || g_.adjacent(a1, a2)) continue;
        // N(A) \ B, N(B) \ A and their intersection.
        std::vector<Vertex> na, nb;
        for (Vertex s : {a1, a2})
          g_.for_each_live_neighbor(s, [&](Vertex y) {
            if (y != b1 && y != b2) na.push_back(y);
          });
        for (Vertex s : {b1, b2})
          g_.for_each_live_neighbor(s, [&](Vertex y) {
            if (y != a1 && y != a2) nb.push_back(y);
          });
        std::sort(na.begin(), na.end());
        na.erase(std::unique(na.begin(), na.end()), na.end());
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        if (na.size() > 2 || nb.size() > 2) continue;
        bool disjoint = std::none_of(na.begin(), na.end(), [&](Vertex y) {
          return std::binary_search(nb.begin(), nb.end(), y);
        });
        if (!disjoint) continue;
        apply_alternative({a1, a2}, {b1, b2});
        return true;
      }
    }
  }
  return false;
}

std::size_t Reducer::alternative(bool funnels, bool four_cycles) {
  std::size_t applied = 0;
  while (true) {
    std::size_t round = 0;
    for (Vertex v : g_.alive_vertices()) {
      if (!g_.alive(v)) continue;
      if ((funnels && alternative_funnel(v)) ||
          (four_cycles && g_.alive(v) && alternative_four_cycle(v))) {
        ensure_capacity();
        ++round;
      }
    }
    applied += round;
    if (round == 0) break;
  }
  return applied;
}

std::size_t Reducer::packing() {
  std::size_t applied = 0;
  while (!ready_.empty()) {
    std::size_t cid = ready_.back();
    ready_.pop_back();
    auto& c = constraints_[cid];
    if (!c.active || c.bound != 0) continue;
    std::vector<Vertex> vars = c.vars;
    c.active = false;
    bool edgeless = true;
    for (std::size_t i = 0; i < vars.size() && edgeless; ++i)
      for (std::size_t j = i + 1; j < vars.size() && edgeless; ++j)
        edgeless = !g_.adjacent(vars[i], vars[j]);
    if (!edgeless) continue;
    for (Vertex x : vars) occurrences_[x].erase(
        std::remove(occurrences_[x].begin(), occurrences_[x].end(), cid), occurrences_[x].end());
    for (Vertex x : vars)
      if (g_.alive(x)) include(x);
    ++applied;
  }
  touched_.clear();
  return applied;
}

std::size_t Reducer::apply(Rule r) {
  std::size_t applied = 0;
  switch (r) {
    case Rule::Pendant: applied = pendant(); break;
    case Rule::Isolated: applied = isolated(); break;
    case Rule::Fold: applied = fold(); break;
    case Rule::Lp: applied = lp(); break;
    case Rule::Unconfined: applied = unconfined(); break;
    case Rule::Twin: applied = twin(); break;
    case Rule::Alternative: applied = alternative(); break;
    case Rule::Packing: applied = packing(); break;
  }
  touched_.clear();
  return applied;
}

// ---------------------------------------------------------------------------
// Free functions

std::size_t reduce_pendant(Graph& g, ReductionStack& stack) { return Reducer(g, stack).pendant(); }
std::size_t reduce_isolated(Graph& g, ReductionStack& stack, std::size_t max_degree) {
  return Reducer(g, stack).isolated(max_degree);
}
std::size_t reduce_fold(Graph& g, ReductionStack& stack) { return Reducer(g, stack).fold(); }
std::size_t reduce_lp(Graph& g, ReductionStack& stack) { return Reducer(g, stack).lp(); }
std::size_t reduce_unconfined(Graph& g, ReductionStack& stack) { return Reducer(g, stack).unconfined(); }
std::size_t reduce_twin(Graph& g, ReductionStack& stack) { return Reducer(g, stack).twin(); }
std::size_t reduce_alternative(Graph& g, ReductionStack& stack) { return Reducer(g, stack).alternative(); }
std::size_t reduce_packing_k0(Graph& g, ReductionStack& stack,
                              std::span<const PackingConstraint> constraints) {
  Reducer r(g, stack);
  for (const auto& c : constraints)
    if (c.active) r.add_constraint(c.vars, c.bound);
  return r.packing();
}

std::size_t KernelResult::total_applications() const {
  std::size_t total = 0;
  for (const auto& [name, count] : per_rule_counts) total += count;
  return total;
}

KernelResult kernelize(Graph g, RuleSet rules) {
  KernelResult result;
  result.kernel = std::move(g);
  for (Rule r : kRuleOrder)
    if (rules.has(r)) result.per_rule_counts[rule_name(r)] = 0;

  Reducer reducer(result.kernel, result.stack);
  bool progress = true;
  while (progress) {
    progress = false;
    for (Rule r : kRuleOrder) {
      if (!rules.has(r)) continue;
      std::size_t applied = reducer.apply(r);
      if (applied > 0) {
        result.per_rule_counts[rule_name(r)] += applied;
        progress = true;
        break;
      }
    }
  }
  result.kernel.prune_dead_entries();
  result.reduced_n = result.kernel.alive_count();
  result.reduced_m = result.kernel.edge_count();
  return result;
}

std::vector<Vertex> lift_solution(const KernelResult& result, std::span<const Vertex> kernel_solution) {
  const Graph& k = result.kernel;
  for (Vertex v : kernel_solution)
    require(k.alive(v), [&] { return "lift_solution: vertex " + std::to_string(v) + " is not in the kernel"; });
  std::vector<Vertex> sorted(kernel_solution.begin(), kernel_solution.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted)
    for (Vertex u : k.adjacency(v))
      if (u > v && k.alive(u) && std::binary_search(sorted.begin(), sorted.end(), u))
        throw ContractViolation("lift_solution: kernel solution is not independent (" +
                                std::to_string(v) + ", " + std::to_string(u) + ")");
  return result.stack.lift(sorted, k.original_size());
}

}  // namespace fastmis
