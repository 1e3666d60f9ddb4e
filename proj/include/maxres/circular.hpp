#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxres/formula.hpp"
#include "maxres/proof.hpp"

namespace maxres {

using Rational = boost::multiprecision::cpp_rational;

enum class NodeTag { orig, budget, derived };
enum class CircularRule { split, symres };

struct CircularNode {
  Clause clause;
  NodeTag tag = NodeTag::derived;
};

struct CircularInference {
  CircularRule rule;
  std::vector<std::size_t> inputs;   // node indices
  std::vector<std::size_t> outputs;  // node indices
};

// SAT proof graph over clause nodes that may contain cycles. Only
// symmetric resolution (v∨A, ¬v∨A -> A) and split (C -> C∨v, C∨¬v) occur.
struct CircularPreProof {
  std::vector<CircularNode> nodes;
  std::vector<CircularInference> inferences;
  std::size_t conclusion = 0;

  std::size_t add_node(const Clause& c, NodeTag tag);
  std::size_t add_inference(CircularRule rule, std::vector<std::size_t> in, std::vector<std::size_t> out);
  std::vector<Clause> original() const;  // clauses tagged orig
};

// Flow per inference index; every inference needs an entry.
using FlowAssignment = std::map<std::size_t, Rational>;

// Inflow minus outflow per node. Throws Error on a missing flow entry.
std::vector<Rational> compute_balances(const CircularPreProof& p, const FlowAssignment& f);

struct CircularVerdict {
  bool valid = false;
  std::string reason;
  std::optional<std::size_t> node;       // offending clause node
  std::optional<std::size_t> inference;  // offending inference
  std::vector<Rational> balances;
};

// Valid iff each inference is a well formed split or symmetric resolution,
// every flow is strictly positive, every node not tagged orig has balance
// >= 0, and the conclusion has balance > 0 (whatever its tag).
CircularVerdict check_circular(const CircularPreProof& p, const FlowAssignment& f);

// Builds a ResSV proof of (□,1) from the hard original clauses plus the
// negation expansion of the conclusion (just the originals when the
// conclusion is □). Flows are scaled to integers first.
Proof circular_to_ressv(const CircularPreProof& p, const FlowAssignment& f);

struct CircularProof {
  CircularPreProof graph;
  FlowAssignment flow;
};

// Inverse direction. The proof must be valid, start from hard clauses plus
// the negation expansion of some clause A at weight 1, and refute (□, k).
// Resolutions are first rewritten into splits and symmetric resolutions.
CircularProof ressv_to_circular(const Proof& p);

// Resolution step rewritten as splits plus at most one symmetric resolution.
std::vector<RuleApplication> symmetrize(const Resolution& r);

// Recovers A from the soft part of an initial formula built as hard F plus
// the negation expansion of (A,1). Throws Error if the shape does not match.
Clause conclusion_from_initial(const Formula& initial);

}  // namespace maxres
