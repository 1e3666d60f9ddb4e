#include "maxres/circular.hpp"

#include <algorithm>
#include <set>

#include "maxres/error.hpp"

namespace maxres {

namespace {

std::string inf_name(std::size_t j) { return "i" + std::to_string(j + 1); }
std::string node_name(std::size_t i) { return "c" + std::to_string(i + 1); }

// The literal l with out = base ∪ {l}, var(l) ∉ base; nullopt otherwise.
std::optional<Literal> extension_literal(const Clause& base, const Clause& out) {
  if (out.size() != base.size() + 1) return std::nullopt;
  std::optional<Literal> extra;
  for (const auto& l : out.literals()) {
    if (base.contains(l)) continue;
    if (extra) return std::nullopt;
    extra = l;
  }
  if (!extra || base.contains_var(extra->var())) return std::nullopt;
  return extra;
}

bool well_formed(const CircularPreProof& p, const CircularInference& inf) {
  const auto& n = p.nodes;
  if (inf.rule == CircularRule::split) {
    if (inf.inputs.size() != 1 || inf.outputs.size() != 2) return false;
    const Clause& c = n[inf.inputs[0]].clause;
    auto l = extension_literal(c, n[inf.outputs[0]].clause);
    return l && n[inf.outputs[1]].clause == c.with(~*l);
  }
  if (inf.inputs.size() != 2 || inf.outputs.size() != 1) return false;
  const Clause& a = n[inf.outputs[0]].clause;
  auto l = extension_literal(a, n[inf.inputs[0]].clause);
  return l && n[inf.inputs[1]].clause == a.with(~*l);
}

BigInt lcm_of_denominators(const FlowAssignment& f) {
  BigInt l = 1;
  for (const auto& [j, q] : f) l = boost::multiprecision::lcm(l, denominator(q));
  return l;
}

}  // namespace

std::size_t CircularPreProof::add_node(const Clause& c, NodeTag tag) {
  nodes.push_back({c, tag});
  return nodes.size() - 1;
}

std::size_t CircularPreProof::add_inference(CircularRule rule, std::vector<std::size_t> in, std::vector<std::size_t> out) {
  inferences.push_back({rule, std::move(in), std::move(out)});
  return inferences.size() - 1;
}

std::vector<Clause> CircularPreProof::original() const {
  std::vector<Clause> out;
  for (const auto& n : nodes)
    if (n.tag == NodeTag::orig) out.push_back(n.clause);
  return out;
}

std::vector<Rational> compute_balances(const CircularPreProof& p, const FlowAssignment& f) {
  std::vector<Rational> b(p.nodes.size());
  for (std::size_t j = 0; j < p.inferences.size(); ++j) {
    auto it = f.find(j);
    if (it == f.end()) throw Error("missing flow entry for " + inf_name(j));
    for (auto i : p.inferences[j].inputs) b.at(i) -= it->second;
    for (auto o : p.inferences[j].outputs) b.at(o) += it->second;
  }
  return b;
}

CircularVerdict check_circular(const CircularPreProof& p, const FlowAssignment& f) {
  CircularVerdict v;
  auto fail = [&](std::string why) {
    v.reason = std::move(why);
    return v;
  };
  if (p.conclusion >= p.nodes.size()) return fail("conclusion is not a node");
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    if (p.nodes[i].clause.is_tautology()) {
      v.node = i;
      return fail("tautological clause at " + node_name(i));
    }
  for (std::size_t j = 0; j < p.inferences.size(); ++j) {
    const auto& inf = p.inferences[j];
    v.inference = j;
    for (auto i : inf.inputs)
      if (i >= p.nodes.size()) return fail("unknown node in " + inf_name(j));
    for (auto i : inf.outputs)
      if (i >= p.nodes.size()) return fail("unknown node in " + inf_name(j));
    if (!well_formed(p, inf))
      return fail(std::string("malformed ") + (inf.rule == CircularRule::split ? "split" : "symmetric resolution") +
                  " at " + inf_name(j));
    auto it = f.find(j);
    if (it == f.end()) return fail("missing flow entry for " + inf_name(j));
    if (it->second <= 0) return fail("flow not positive at " + inf_name(j));
  }
  v.inference.reset();
  v.balances = compute_balances(p, f);
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (p.nodes[i].tag != NodeTag::orig && v.balances[i] < 0) {
      v.node = i;
      return fail("negative balance at " + node_name(i));
    }
  }
  if (v.balances[p.conclusion] <= 0) {
    v.node = p.conclusion;
    return fail("conclusion balance not positive");
  }
  v.valid = true;
  return v;
}

Proof circular_to_ressv(const CircularPreProof& p, const FlowAssignment& f) {
  auto verdict = check_circular(p, f);
  if (!verdict.valid) throw Error("invalid circular proof: " + verdict.reason);

  // integer flows keep every weight in the ResSV proof integral
  const BigInt scale = lcm_of_denominators(f);
  std::vector<Weight> flow(p.inferences.size());
  for (const auto& [j, q] : f) flow[j] = Weight(BigInt(numerator(q) * (scale / denominator(q))));

  std::vector<Weight> inflow(p.nodes.size(), Weight(0));
  for (std::size_t j = 0; j < p.inferences.size(); ++j)
    for (auto o : p.inferences[j].outputs) inflow[o] += flow[j];

  Var universe = 0;
  for (const auto& n : p.nodes) universe = std::max(universe, n.clause.max_var());

  const Clause& a = p.nodes[p.conclusion].clause;
  Proof out;
  out.initial = Formula(universe);
  for (const auto& n : p.nodes)
    if (n.tag == NodeTag::orig) out.initial.add(n.clause, Weight::infinity());
  if (!a.empty()) out.initial.add(negate_clause({a, Weight(1)}));

  // phase 1: pay for every non-original clause up front
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    if (p.nodes[i].tag != NodeTag::orig && inflow[i].is_positive())
      out.steps.push_back(Virtual{p.nodes[i].clause, inflow[i]});

  // phase 2: one rule per inference, weight = flow
  for (std::size_t j = 0; j < p.inferences.size(); ++j) {
    const auto& inf = p.inferences[j];
    if (inf.rule == CircularRule::split) {
      const Clause& c = p.nodes[inf.inputs[0]].clause;
      Var v = extension_literal(c, p.nodes[inf.outputs[0]].clause)->var();
      out.steps.push_back(Split{c, v, flow[j]});
    } else {
      const Clause& res = p.nodes[inf.outputs[0]].clause;
      const Clause& in0 = p.nodes[inf.inputs[0]].clause;
      Literal pivot = *extension_literal(res, in0);
      out.steps.push_back(Resolution{pivot, in0, p.nodes[inf.inputs[1]].clause, flow[j]});
    }
  }

  // phase 3: walk A down to □ against its negation expansion
  Clause cur = a;
  for (std::size_t k = a.size(); k-- > 0;) {
    Literal l = a[k];
    Clause prefix = cur.without(l);
    out.steps.push_back(Resolution{l, cur, prefix.with(~l), Weight(1)});
    cur = prefix;
  }
  out.target = {Clause{}, Weight(1)};
  return out;
}

std::vector<RuleApplication> symmetrize(const Resolution& r) {
  std::vector<RuleApplication> steps;
  auto walk = [&](Clause cur, const Clause& extra) -> std::optional<Clause> {
    for (const auto& l : extra.literals()) {
      if (cur.contains(l)) continue;
      if (cur.contains(~l)) return std::nullopt;  // resolvent would be a tautology
      steps.push_back(Split{cur, l.var(), r.amount});
      cur = cur.with(l);
    }
    return cur;
  };
  const Clause rest_a = r.clause_a.without(r.pivot);
  const Clause rest_b = r.clause_b.without(~r.pivot);
  auto wide_a = walk(r.clause_a, rest_b);
  auto wide_b = walk(r.clause_b, rest_a);
  if (wide_a && wide_b) steps.push_back(Resolution{r.pivot, *wide_a, *wide_b, r.amount});
  return steps;
}

Clause conclusion_from_initial(const Formula& initial) {
  std::vector<WeightedClause> soft;
  for (const auto& [c, w] : initial.entries())
    if (w.is_finite()) soft.push_back({c, w});
  if (soft.empty()) return Clause{};

  auto shape_error = [] { return Error("initial formula is not hard clauses plus a negated clause at weight 1"); };
  const Clause* longest = nullptr;
  for (const auto& wc : soft) {
    if (wc.weight != Weight(1) || wc.clause.empty()) throw shape_error();
    if (!longest || wc.clause.size() > longest->size()) longest = &wc.clause;
  }
  Literal last = (*longest)[longest->size() - 1];
  Clause a = longest->without(last).with(~last);

  Formula expected = negate_clause({a, Weight(1)});
  for (const auto& [c, w] : expected.entries()) {
    Weight have = initial.weight(c);
    if (have != Weight(1) && !have.is_infinite()) throw shape_error();
  }
  for (const auto& wc : soft)
    if (!expected.contains(wc.clause)) throw shape_error();
  return a;
}

CircularProof ressv_to_circular(const Proof& p) {
  auto verdict = check_proof(p);
  if (!verdict.valid) throw Error("invalid proof: " + verdict.reason);
  if (!p.target.clause.empty() || !p.target.weight.is_positive()) throw Error("proof must refute (□, k) with k > 0");

  const Clause a = conclusion_from_initial(p.initial);
  std::set<Clause> negated;
  if (!a.empty()) {
    const Formula neg = negate_clause({a, Weight(1)});
    for (const auto& [c, w] : neg.entries()) negated.insert(c);
  }

  CircularProof out;
  auto& g = out.graph;
  std::map<Clause, std::size_t> node_of;
  for (const auto& [c, w] : p.initial.entries())
    if (w.is_infinite()) node_of[c] = g.add_node(c, NodeTag::orig);

  std::set<Clause> virtualized;
  auto node = [&](const Clause& c) {
    auto it = node_of.find(c);
    if (it != node_of.end()) return it->second;
    return node_of[c] = g.add_node(c, NodeTag::derived);
  };

  // rewritten steps: splits and symmetric resolutions only
  std::vector<Weight> amounts;
  for (const auto& step : p.steps) {
    std::vector<RuleApplication> parts;
    if (auto* r = std::get_if<Resolution>(&step))
      parts = symmetrize(*r);
    else
      parts = {step};
    for (const auto& part : parts) {
      if (auto* v = std::get_if<Virtual>(&part)) {
        virtualized.insert(v->clause);
        continue;
      }
      if (auto* s = std::get_if<Split>(&part)) {
        g.add_inference(CircularRule::split, {node(s->clause)},
                        {node(s->clause.with(Literal::positive(s->var))), node(s->clause.with(Literal::negative(s->var)))});
        amounts.push_back(s->amount);
      } else {
        const auto& r = std::get<Resolution>(part);
        g.add_inference(CircularRule::symres, {node(r.clause_a), node(r.clause_b)}, {node(resolvent(r))});
        amounts.push_back(r.amount);
      }
    }
  }
  const std::size_t proof_inferences = g.inferences.size();

  // □ is split back into A and its negation expansion
  std::size_t conclusion;
  if (a.empty()) {
    conclusion = node(Clause{});
  } else {
    conclusion = node_of.contains(a) && g.nodes[node_of[a]].tag == NodeTag::orig ? g.add_node(a, NodeTag::derived)
                                                                                   : node(a);
    Clause prefix;
    std::size_t cur = node(Clause{});
    for (std::size_t k = 0; k < a.size(); ++k) {
      Literal l = a[k];
      std::size_t keep = (k + 1 == a.size()) ? conclusion : node(prefix.with(l));
      std::size_t side = node(prefix.with(~l));
      std::vector<std::size_t> outs = l.is_positive() ? std::vector<std::size_t>{keep, side}
                                                      : std::vector<std::size_t>{side, keep};
      g.add_inference(CircularRule::split, {cur}, outs);
      amounts.push_back(Weight(1));
      prefix = prefix.with(l);
      cur = keep;
    }
  }
  g.conclusion = conclusion;

  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i].tag == NodeTag::orig) continue;
    const Clause& c = g.nodes[i].clause;
    if (virtualized.contains(c) || negated.contains(c)) g.nodes[i].tag = NodeTag::budget;
  }

  // finite amounts carry over; infinite ones get the least flow that keeps
  // their consequents balanced, settled from the last step backwards
  std::vector<Rational> in(g.nodes.size()), outf(g.nodes.size());
  for (std::size_t j = 0; j < g.inferences.size(); ++j) {
    if (amounts[j].is_infinite()) continue;
    Rational q(amounts[j].value());
    out.flow[j] = q;
    for (auto i : g.inferences[j].inputs) outf[i] += q;
    for (auto o : g.inferences[j].outputs) in[o] += q;
  }
  for (std::size_t j = proof_inferences; j-- > 0;) {
    if (amounts[j].is_finite()) continue;
    Rational need = 1;
    for (auto o : g.inferences[j].outputs) {
      if (g.nodes[o].tag == NodeTag::orig) continue;
      Rational deficit = outf[o] - in[o] + (o == conclusion ? 1 : 0);
      need = std::max(need, deficit);
    }
    out.flow[j] = need;
    for (auto i : g.inferences[j].inputs) outf[i] += need;
    for (auto o : g.inferences[j].outputs) in[o] += need;
  }

  auto check = check_circular(g, out.flow);
  if (!check.valid) throw Error("translation produced an invalid circular proof: " + check.reason);
  return out;
}

}  // namespace maxres
