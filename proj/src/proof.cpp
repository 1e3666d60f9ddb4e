#include "maxres/proof.hpp"

#include <algorithm>

namespace maxres {

ProofState::ProofState(const Formula& initial) : positive_(initial.num_vars()) {
  for (const auto& [c, w] : initial.entries()) {
    if (w.is_negative())
      negative_[c] += w;
    else
      positive_.add(c, w);
  }
}

void ProofState::consume(const Clause& c, const Weight& m) {
  Weight v = positive_.weight(c);
  if (v.is_zero()) throw StepError(negative_.contains(c) ? "negative antecedent" : "missing antecedent");
  if (v.is_infinite()) return;  // hard clauses stay
  if (m.is_infinite() || v < m) throw StepError("insufficient weight");
  positive_.add(c, -m);
}

void ProofState::apply(const RuleApplication& a) {
  const auto ants = antecedents(a);
  bool hard[2] = {false, false};
  for (std::size_t i = 0; i < ants.size(); ++i) hard[i] = positive_.weight(ants[i]).is_infinite();

  RuleEffect e;
  try {
    e = apply_rule(a, hard[0], hard[1]);
  } catch (const StepError&) {
    throw;
  } catch (const Error& err) {
    throw StepError(err.what());
  }

  for (const auto& wc : e.consumed) consume(wc.clause, wc.weight);
  if (auto* s = std::get_if<Split>(&a)) positive_.ensure_vars(s->var);
  for (const auto& wc : e.produced) {
    if (wc.weight.is_negative()) {
      positive_.ensure_vars(wc.clause.max_var());
      Weight& slot = negative_[wc.clause];
      slot += wc.weight;
      if (slot.is_zero()) negative_.erase(wc.clause);
    } else {
      positive_.add(wc);
    }
  }
  ++step_index_;
}

Formula ProofState::merged() const {
  Formula f = positive_;
  for (const auto& [c, w] : negative_) f.add(c, w);
  return f;
}

ProofState apply_step(ProofState s, const RuleApplication& a) {
  s.apply(a);
  return s;
}

Formula replay(const Proof& p) {
  ProofState s(p.initial);
  for (const auto& a : p.steps) s.apply(a);
  return s.merged();
}

ProofVerdict check_proof(const Proof& p) {
  ProofVerdict v;
  v.length = p.steps.size();
  ProofState s(p.initial);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    try {
      s.apply(p.steps[i]);
    } catch (const StepError& e) {
      v.failed_step = i;
      v.reason = e.what();
      v.final_formula = s.merged();
      v.derived_weight = v.final_formula.weight(p.target.clause);
      return v;
    }
  }
  v.final_formula = s.merged();
  v.derived_weight = v.final_formula.weight(p.target.clause);
  if (p.target.weight.is_negative()) {
    v.reason = "negative target weight";
  } else if (v.final_formula.has_negative()) {
    v.reason = "negative weight at end";
  } else if (v.derived_weight < p.target.weight) {
    v.reason = "target not derived";
  } else {
    v.valid = true;
    v.merges = build_graph(p).count(InferenceKind::merge);
  }
  return v;
}

CanonicalExpansion expand_canonical(const Formula& f, Var bound) {
  const Var n = f.num_vars();
  if (n > bound) throw Error("oracle bound exceeded");
  for (const auto& [c, w] : f.entries())
    if (!w.is_positive() || w.is_infinite()) throw Error("canonical expansion needs finite positive weights");

  CanonicalExpansion out;
  out.proof.initial = f;
  ProofState s(f);
  for (;;) {
    std::optional<Split> next;
    for (const auto& [c, w] : s.positive().entries()) {
      if (c.size() == n) continue;
      Var v = 1;
      while (c.contains_var(v)) ++v;
      next = Split{c, v, w};
      break;
    }
    if (!next) break;
    out.proof.steps.push_back(*next);
    s.apply(*next);
  }
  out.expanded = s.merged();
  if (out.expanded.empty())
    out.proof.target = {Clause{}, Weight(0)};
  else
    out.proof.target = out.expanded.clauses().front();
  return out;
}

std::vector<RuleApplication> clause_pair_steps(const Clause& c, const Weight& w) {
  if (c.empty()) throw Error("clause pair needs a nonempty clause");
  if (!w.is_positive() || w.is_infinite()) throw Error("clause pair weight must be finite and positive");
  std::vector<RuleApplication> steps;
  steps.push_back(Virtual{Clause{}, w});
  Clause prefix;
  for (const auto& l : c.literals()) {
    steps.push_back(Split{prefix, l.var(), w});
    prefix = prefix.with(l);
  }
  return steps;
}

ProofState introduce_clause_pair(ProofState s, const Clause& c, const Weight& w) {
  for (const auto& a : clause_pair_steps(c, w)) s.apply(a);
  return s;
}

}  // namespace maxres
