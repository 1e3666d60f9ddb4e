#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxres/error.hpp"
#include "maxres/formula.hpp"
#include "maxres/rules.hpp"

namespace maxres {

struct Proof {
  Formula initial;
  std::vector<RuleApplication> steps;
  WeightedClause target;
  std::string source;  // name of the instance file, for traces
};

// A rule that cannot be applied in the current state.
class StepError : public Error {
 public:
  using Error::Error;
};

// Replay state. Positive mass and negative mass live in separate pools:
// antecedents are drawn from the positive pool only, and the two meet in
// the merged view. Drawing from a hard entry leaves it in place.
class ProofState {
 public:
  ProofState() = default;
  explicit ProofState(const Formula& initial);

  // Throws StepError with reason "missing antecedent", "insufficient
  // weight", "negative antecedent", or the rule's own precondition message.
  void apply(const RuleApplication& a);

  const Formula& positive() const { return positive_; }
  const std::map<Clause, Weight>& negative() const { return negative_; }
  Formula merged() const;
  Weight available(const Clause& c) const { return positive_.weight(c); }
  std::size_t step_index() const { return step_index_; }
  Var num_vars() const { return positive_.num_vars(); }

 private:
  void consume(const Clause& c, const Weight& m);

  Formula positive_;
  std::map<Clause, Weight> negative_;
  std::size_t step_index_ = 0;
};

ProofState apply_step(ProofState s, const RuleApplication& a);

struct ProofVerdict {
  bool valid = false;
  std::optional<std::size_t> failed_step;  // 0-based step index
  std::string reason;
  Weight derived_weight;  // merged weight of the target clause at the end
  std::size_t length = 0;  // rule applications
  std::size_t merges = 0;  // merge nodes of the proof graph
  Formula final_formula;
};

// Valid iff every step applies, no negative weight survives the final
// merge, and the target clause ends with at least the claimed weight.
ProofVerdict check_proof(const Proof& p);

// Formula reached after replaying every step (throws StepError on failure).
Formula replay(const Proof& p);

struct CanonicalExpansion {
  Formula expanded;
  Proof proof;  // split-only derivation of `expanded` from the input
};

// Splits every clause until it mentions each variable of the universe.
// Requires positive finite weights and a universe within `bound`.
CanonicalExpansion expand_canonical(const Formula& f, Var bound = 24);

// One virtual step on (□, w) followed by |c| splits, leaving
// (□,-w), (c,w) and the negation expansion of (c,w).
std::vector<RuleApplication> clause_pair_steps(const Clause& c, const Weight& w);
ProofState introduce_clause_pair(ProofState s, const Clause& c, const Weight& w);

// ---- proof graph ----

enum class InferenceKind { resolution, split, virtual_rule, merge };

struct GraphClause {
  Clause clause;
  Weight weight;
  std::optional<std::size_t> created_at;  // step index; nullopt for initial clauses
};

struct GraphInference {
  InferenceKind kind;
  std::optional<std::size_t> step;  // nullopt for merges after the last step
  std::vector<std::size_t> antecedents;
  std::vector<std::size_t> consequents;
};

struct ProofGraph {
  std::vector<GraphClause> clauses;
  std::vector<GraphInference> inferences;

  std::size_t count(InferenceKind kind) const;
  std::size_t max_clause_out_degree() const;
  bool acyclic() const;
};

// Throws Error when the proof does not replay.
ProofGraph build_graph(const Proof& p);

}  // namespace maxres
