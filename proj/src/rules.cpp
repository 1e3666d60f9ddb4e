#include "maxres/rules.hpp"

#include "maxres/error.hpp"

namespace maxres {

namespace {

void require_positive_amount(const Weight& m) {
  if (m.is_zero()) throw Error("zero amount");
  if (m.is_negative()) throw Error("negative amount");
}

// Expansion of (prefix ∨ ¬tail) as a list, tautologies dropped.
void push_expansion(const Clause& prefix, const Clause& tail, const Weight& w, std::vector<WeightedClause>& out) {
  Clause acc = prefix;
  for (const auto& l : tail.literals()) {
    Clause c = acc.with(~l);
    if (!c.is_tautology()) out.push_back({std::move(c), w});
    acc = acc.with(l);
  }
}

}  // namespace

Clause resolvent(const Resolution& r) { return r.clause_a.without(r.pivot).join(r.clause_b.without(~r.pivot)); }

RuleEffect apply_resolution(const Resolution& r, bool a_hard, bool b_hard) {
  if (!r.clause_a.contains(r.pivot) || !r.clause_b.contains(~r.pivot))
    throw Error("pivot missing or wrong polarity");
  if (r.clause_a.is_tautology() || r.clause_b.is_tautology()) throw Error("tautological antecedent");
  require_positive_amount(r.amount);
  if (r.amount.is_infinite() && !(a_hard && b_hard)) throw Error("infinite amount with a soft antecedent");

  RuleEffect e;
  e.consumed = {{r.clause_a, r.amount}, {r.clause_b, r.amount}};

  const Clause rest_a = r.clause_a.without(r.pivot);
  const Clause rest_b = r.clause_b.without(~r.pivot);
  if (Clause res = rest_a.join(rest_b); !res.is_tautology()) e.produced.push_back({res, r.amount});
  if (!a_hard) push_expansion(r.clause_a, rest_b, r.amount, e.produced);
  if (!b_hard) push_expansion(r.clause_b, rest_a, r.amount, e.produced);
  if (a_hard) e.produced.push_back({r.clause_a, Weight::infinity()});
  if (b_hard) e.produced.push_back({r.clause_b, Weight::infinity()});
  return e;
}

RuleEffect apply_split(const Split& s, bool hard) {
  if (s.var == 0) throw Error("split variable must be at least 1");
  if (s.clause.contains_var(s.var)) throw Error("split variable already in clause");
  if (s.clause.is_tautology()) throw Error("tautological antecedent");
  require_positive_amount(s.amount);
  if (s.amount.is_infinite() && !hard) throw Error("infinite amount with a soft antecedent");

  RuleEffect e;
  e.consumed = {{s.clause, s.amount}};
  e.produced = {{s.clause.with(Literal::positive(s.var)), s.amount},
                {s.clause.with(Literal::negative(s.var)), s.amount}};
  if (hard) e.produced.push_back({s.clause, Weight::infinity()});
  return e;
}

RuleEffect apply_virtual(const Virtual& v) {
  if (v.amount.is_infinite()) throw Error("virtual amount must be finite");
  if (!v.amount.is_positive()) throw Error("virtual amount must be positive");
  if (v.clause.is_tautology()) throw Error("virtual clause is a tautology");
  RuleEffect e;
  e.produced = {{v.clause, v.amount}, {v.clause, -v.amount}};
  return e;
}

RuleEffect apply_rule(const RuleApplication& a, bool first_hard, bool second_hard) {
  if (auto* r = std::get_if<Resolution>(&a)) return apply_resolution(*r, first_hard, second_hard);
  if (auto* s = std::get_if<Split>(&a)) return apply_split(*s, first_hard);
  return apply_virtual(std::get<Virtual>(a));
}

std::vector<Clause> antecedents(const RuleApplication& a) {
  if (auto* r = std::get_if<Resolution>(&a)) return {r->clause_a, r->clause_b};
  if (auto* s = std::get_if<Split>(&a)) return {s->clause};
  return {};
}

const Weight& amount_of(const RuleApplication& a) {
  return std::visit([](const auto& x) -> const Weight& { return x.amount; }, a);
}

std::string rule_name(const RuleApplication& a) {
  if (std::holds_alternative<Resolution>(a)) return "resolution";
  if (std::holds_alternative<Split>(a)) return "split";
  return "virtual";
}

}  // namespace maxres
