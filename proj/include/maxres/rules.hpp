#pragma once

#include <string>
#include <variant>
#include <vector>

#include "maxres/formula.hpp"

namespace maxres {

// MaxSAT resolution of clause_a (contains pivot) with clause_b (contains
// ~pivot), moving `amount` units of weight.
struct Resolution {
  Literal pivot;
  Clause clause_a;
  Clause clause_b;
  Weight amount;
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

struct Split {
  Clause clause;
  Var var = 0;
  Weight amount;
  friend bool operator==(const Split&, const Split&) = default;
};

// Introduces (clause, amount) together with (clause, -amount).
struct Virtual {
  Clause clause;
  Weight amount;
  friend bool operator==(const Virtual&, const Virtual&) = default;
};

using RuleApplication = std::variant<Resolution, Split, Virtual>;

struct RuleEffect {
  std::vector<WeightedClause> consumed;
  std::vector<WeightedClause> produced;
};

// The hardness flags say whether each antecedent is currently hard. A hard
// antecedent is re-produced at infinity, and the compensation family built
// on top of it is omitted since the hard clause subsumes it.
RuleEffect apply_resolution(const Resolution& r, bool a_hard, bool b_hard);
RuleEffect apply_split(const Split& s, bool hard);
RuleEffect apply_virtual(const Virtual& v);
RuleEffect apply_rule(const RuleApplication& a, bool first_hard, bool second_hard);

// Antecedent clauses of a rule (none for virtual).
std::vector<Clause> antecedents(const RuleApplication& a);
const Weight& amount_of(const RuleApplication& a);
std::string rule_name(const RuleApplication& a);

// Resolvent of a resolution step: both clauses without the pivot pair.
Clause resolvent(const Resolution& r);

}  // namespace maxres
