#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fastmis/graph.hpp"

namespace fastmis {

// ---------------------------------------------------------------------------
// Undo log

struct IncludeVertex {
  Vertex v;
};
struct ExcludeVertex {
  Vertex v;
};
// Degree-2 vertex `center` with neighbors u, w contracted into `folded`.
struct FoldRecord {
  Vertex folded, center, u, w;
};
// Degree-3 twins u, v with independent shared neighborhood, replaced by a
// gadget adjacent to their distance-2 vertices.
struct TwinRecord {
  Vertex gadget, u, v;
  std::array<Vertex, 3> neighborhood;
};
// Alternative sets: some optimum meets A ∪ B in exactly A or exactly B.
// a_side/b_side are N(A) \ (B ∪ C) and N(B) \ (A ∪ C); every a_side x b_side
// pair was made adjacent.
struct AlternativeRecord {
  std::vector<Vertex> a, b, a_side, b_side;
  std::vector<Edge> added_edges;
};

using ReductionEntry =
    std::variant<IncludeVertex, ExcludeVertex, FoldRecord, TwinRecord, AlternativeRecord>;

class ReductionStack {
 public:
  void push(ReductionEntry entry);

  const std::vector<ReductionEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Vertices every lifted solution gains over the kernel solution it came from.
  std::size_t offset() const { return offset_; }

  // Replays the log backwards over a kernel independent set and returns the
  // corresponding independent set of the input graph, sorted. Gadget ids are
  // resolved away; only ids < original_n survive.
  std::vector<Vertex> lift(std::span<const Vertex> kernel_solution, std::size_t original_n) const;

 private:
  std::vector<ReductionEntry> entries_;
  std::size_t offset_ = 0;
  Vertex max_id_ = 0;
};

// ---------------------------------------------------------------------------
// Rules

enum class Rule : unsigned {
  Pendant = 0,
  Isolated,
  Fold,
  Lp,
  Unconfined,
  Twin,
  Alternative,
  Packing,
};
inline constexpr std::size_t kRuleCount = 8;
// Application priority used by kernelize.
inline constexpr std::array<Rule, kRuleCount> kRuleOrder = {
    Rule::Pendant, Rule::Isolated,   Rule::Fold,        Rule::Lp,
    Rule::Unconfined, Rule::Twin, Rule::Alternative, Rule::Packing};

const char* rule_name(Rule r);

class RuleSet {
 public:
  constexpr RuleSet() = default;
  constexpr explicit RuleSet(unsigned mask) : mask_(mask & ((1u << kRuleCount) - 1)) {}

  static constexpr RuleSet all() { return RuleSet((1u << kRuleCount) - 1); }
  // Every rule except isolated vertex removal.
  static constexpr RuleSet akiba_iwata() {
    return RuleSet(all().mask() & ~(1u << static_cast<unsigned>(Rule::Isolated)));
  }
  static constexpr RuleSet none() { return RuleSet(0); }

  constexpr bool has(Rule r) const { return mask_ & (1u << static_cast<unsigned>(r)); }
  constexpr RuleSet with(Rule r) const { return RuleSet(mask_ | (1u << static_cast<unsigned>(r))); }
  constexpr RuleSet without(Rule r) const {
    return RuleSet(mask_ & ~(1u << static_cast<unsigned>(r)));
  }
  constexpr unsigned mask() const { return mask_; }

  // Comma separated rule names; "all", "akiba-iwata" and "none" also accepted.
  static RuleSet parse(const std::string& text);

 private:
  unsigned mask_ = 0;
};

// Constraint sum_{v in S} x_v <= bound where x_v = 1 means "v not in the
// independent set". Only the bound-zero case is ever acted on.
struct PackingConstraint {
  std::vector<Vertex> vars;
  long bound = 0;
  bool active = true;
};

// Applies reduction rules to a graph in place, logging undo records.
//
// Packing constraints are generated by single-vertex exclusions: once v is
// dropped because some optimum avoids it, every optimum of the remaining
// graph must contain a vertex of N(v) (otherwise v could be added back), so
// sum_{u in N(v)} x_u <= |N(v)| - 1. Constraints are updated when their
// variables are included (removed, bound kept) or excluded (removed, bound
// decremented) and retired when a variable is consumed by a fold, twin gadget
// or alternative.
class Reducer {
 public:
  Reducer(Graph& g, ReductionStack& stack);

  Graph& graph() { return g_; }

  std::size_t pendant();
  std::size_t isolated(std::size_t max_degree = static_cast<std::size_t>(-1));
  std::size_t fold();
  std::size_t lp(bool minimize_half_part = true);
  std::size_t unconfined();
  std::size_t twin();
  // Funnels ({u}, {v} with N(v) \ {u} a clique) and chordless 4-cycles
  // a1 b1 a2 b2 of degree >= 3; either pattern can be switched off.
  std::size_t alternative(bool funnels = true, bool four_cycles = true);
  std::size_t packing();

  std::size_t apply(Rule r);

  // Adds an explicit constraint (mainly for tests and callers that know one).
  void add_constraint(std::vector<Vertex> vars, long bound);
  const std::vector<PackingConstraint>& constraints() const { return constraints_; }

  // Whether v passes the confinement test (exposed for tests).
  bool is_unconfined(Vertex v);
  // Closed neighborhood of v is a clique.
  bool is_simplicial(Vertex v);

 private:
  void include(Vertex v);
  void exclude(Vertex v);
  void remove_included_neighborhood(Vertex v);
  void note_included(Vertex v);
  void note_excluded(Vertex v);
  void note_consumed(Vertex v);
  void ensure_capacity();
  bool alternative_funnel(Vertex v);
  bool alternative_four_cycle(Vertex a1);
  void apply_alternative(std::vector<Vertex> a, std::vector<Vertex> b);

  Graph& g_;
  ReductionStack& stack_;
  std::vector<PackingConstraint> constraints_;
  std::vector<std::vector<std::size_t>> occurrences_;
  std::vector<std::size_t> ready_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> count_;
  std::vector<Vertex> touched_;

  std::uint32_t next_epoch();
};

// Single-rule entry points; each runs its rule to a fixpoint on g.
std::size_t reduce_pendant(Graph& g, ReductionStack& stack);
std::size_t reduce_isolated(Graph& g, ReductionStack& stack,
                            std::size_t max_degree = static_cast<std::size_t>(-1));
std::size_t reduce_fold(Graph& g, ReductionStack& stack);
std::size_t reduce_lp(Graph& g, ReductionStack& stack);
std::size_t reduce_unconfined(Graph& g, ReductionStack& stack);
std::size_t reduce_twin(Graph& g, ReductionStack& stack);
std::size_t reduce_alternative(Graph& g, ReductionStack& stack);
std::size_t reduce_packing_k0(Graph& g, ReductionStack& stack,
                              std::span<const PackingConstraint> constraints);

struct KernelResult {
  Graph kernel;
  ReductionStack stack;
  std::map<std::string, std::size_t> per_rule_counts;
  std::size_t reduced_n = 0;
  std::size_t reduced_m = 0;
  std::size_t total_applications() const;
};

// Applies the enabled rules in kRuleOrder, restarting from the first rule
// after any successful application, until none applies.
KernelResult kernelize(Graph g, RuleSet rules = RuleSet::akiba_iwata());

// Checks kernel_solution is independent in result.kernel, then lifts it.
std::vector<Vertex> lift_solution(const KernelResult& result, std::span<const Vertex> kernel_solution);

}  // namespace fastmis
