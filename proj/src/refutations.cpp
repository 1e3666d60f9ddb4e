#include "maxres/refutations.hpp"

#include <algorithm>

#include "maxres/error.hpp"

namespace maxres {

namespace {

Literal pos(Var v) { return Literal::positive(v); }
Literal neg(Var v) { return Literal::negative(v); }

// (x_i1 ∨ … ∨ x_im) against the units (¬x_ij, 1), one hole at a time.
void push_pigeon(unsigned m, unsigned i, std::vector<RuleApplication>& out) {
  for (unsigned k = 1; k <= m; ++k) {
    std::vector<Literal> rest;
    for (unsigned j = k; j <= m; ++j) rest.push_back(pos(pigeon_var(m, i, j)));
    Var v = pigeon_var(m, i, k);
    out.push_back(Resolution{pos(v), Clause(rest), Clause{neg(v)}, Weight(1)});
  }
}

std::vector<Var> hole_column(unsigned m, unsigned j, unsigned n) {
  std::vector<Var> y;
  for (unsigned i = 1; i <= n; ++i) y.push_back(pigeon_var(m, i, j));
  return y;
}

void append(std::vector<RuleApplication>& to, const std::vector<RuleApplication>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

void require_resolution_only(const Proof& p, const char* name) {
  for (const auto& a : p.steps)
    if (!std::holds_alternative<Resolution>(a)) throw Error(std::string(name) + " must use resolution only");
}

}  // namespace

std::vector<RuleApplication> lemma1_steps(const std::vector<Var>& y) {
  const std::size_t n = y.size();
  if (n < 2) throw Error("lemma chain needs n >= 2");
  std::vector<RuleApplication> steps;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    std::vector<Literal> a;
    for (std::size_t i = t; i + 1 < n; ++i) a.push_back(pos(y[i]));
    if (t > 0) a.push_back(neg(y[n - 1]));
    steps.push_back(Resolution{pos(y[t]), Clause(a), Clause{neg(y[t]), neg(y[n - 1])}, Weight(1)});
  }
  return steps;
}

Proof lemma1_chain(std::size_t n) {
  if (n < 2) throw Error("lemma chain needs n >= 2");
  Proof p;
  p.initial = Formula(Var(n));
  std::vector<Literal> head;
  std::vector<Var> y;
  for (Var i = 1; i <= n; ++i) y.push_back(i);
  for (Var i = 1; i < n; ++i) {
    head.push_back(pos(i));
    p.initial.add(Clause{neg(i), neg(Var(n))}, Weight(1));
  }
  p.initial.add(Clause(head), Weight(1));
  p.steps = lemma1_steps(y);
  p.target = {Clause{neg(Var(n))}, Weight(1)};
  return p;
}

std::vector<RuleApplication> pigeon_core_steps(unsigned m) {
  if (m == 0) throw Error("pigeonhole needs m >= 1");
  std::vector<RuleApplication> steps;
  for (unsigned i = 1; i <= m + 1; ++i) push_pigeon(m, i, steps);
  for (unsigned j = 1; j <= m; ++j) {
    for (unsigned n = 2; n <= m + 1; ++n) {
      append(steps, lemma1_steps(hole_column(m, j, n)));
      Var yn = pigeon_var(m, n, j);
      steps.push_back(Resolution{pos(yn), Clause{pos(yn)}, Clause{neg(yn)}, Weight(1)});
    }
  }
  return steps;
}

Proof build_sphp1_refutation(unsigned m) {
  Proof p;
  p.initial = gen_pigeonhole(PigeonVariant::sphp1, m).formula;
  p.steps = pigeon_core_steps(m);
  p.target = {Clause{}, Weight(std::int64_t(m) * m + m + 1)};
  p.source = "sphp1-" + std::to_string(m) + ".wcnf";
  return p;
}

Proof build_sphp0_refutation(unsigned m) {
  Proof p;
  p.initial = gen_pigeonhole(PigeonVariant::sphp0, m).formula;
  for (Var v = 1; v <= Var(m * (m + 1)); ++v) p.steps.push_back(Split{Clause{}, v, Weight(1)});
  append(p.steps, pigeon_core_steps(m));
  p.target = {Clause{}, Weight(std::int64_t(m) * m + m + 1)};
  p.source = "sphp0-" + std::to_string(m) + ".wcnf";
  return p;
}

Proof build_sphp_refutation(unsigned m) {
  Proof p;
  p.initial = gen_pigeonhole(PigeonVariant::sphp, m).formula;
  const Var n = Var(m * (m + 1));
  for (Var v = 1; v <= n; ++v) {
    p.steps.push_back(Virtual{Clause{pos(v)}, Weight(1)});
    p.steps.push_back(Virtual{Clause{neg(v)}, Weight(1)});
  }
  append(p.steps, pigeon_core_steps(m));
  // give back the borrowed units
  for (Var v = 1; v <= n; ++v) p.steps.push_back(Split{Clause{}, v, Weight(1)});
  p.target = {Clause{}, Weight(1)};
  p.source = "sphp-" + std::to_string(m) + ".wcnf";
  return p;
}

Proof build_php_lb1_refutation(unsigned m) {
  Proof p;
  p.initial = gen_pigeonhole(PigeonVariant::php, m).formula;
  const Var n = Var(m * (m + 1));
  p.steps.push_back(Virtual{Clause{}, Weight(std::int64_t(n))});
  for (Var v = 1; v <= n; ++v) p.steps.push_back(Split{Clause{}, v, Weight(1)});
  append(p.steps, pigeon_core_steps(m));
  p.target = {Clause{}, Weight(1)};
  p.source = "php-" + std::to_string(m) + ".wcnf";
  return p;
}

Proof soft_probe(const Formula& f, const Formula& u, const Proof& d1, const Proof& d2) {
  Formula complemented;
  for (const auto& [c, w] : u.entries()) {
    if (c.size() != 1) throw Error("probing set must be unit clauses");
    if (!w.is_positive() || w.is_infinite()) throw Error("probing weights must be finite and positive");
    if (u.contains(Clause{~c[0]})) throw Error("probing set has a complementary pair");
    complemented.add(Clause{~c[0]}, w);
  }
  if (f.has_negative()) throw Error("probed formula has negative weights");
  const Weight k = roof(u);

  Formula start = f;
  start.add(u);
  if (d1.initial.entries() != start.entries()) throw Error("d1 does not start from F plus the probing units");
  require_resolution_only(d1, "d1");
  require_resolution_only(d2, "d2");

  Formula rest;
  try {
    rest = replay(d1);
  } catch (const StepError& e) {
    throw Error(std::string("d1 does not replay: ") + e.what());
  }
  if (rest.weight(Clause{}) < k) throw Error("d1 derives less than the roof of the probing set");
  rest.add(Clause{}, -k);

  Formula second = rest;
  second.add(complemented);
  if (d2.initial.entries() != second.entries()) throw Error("d2 does not start from d1's remainder plus the complemented units");
  auto v2 = check_proof(d2);
  if (!v2.valid) throw Error("d2 is not a valid proof: " + v2.reason);

  Proof p;
  p.initial = f;
  p.initial.ensure_vars(std::max(u.num_vars(), d1.initial.num_vars()));
  for (const auto& [c, w] : u.entries()) p.steps.push_back(Virtual{c, w});
  append(p.steps, d1.steps);
  for (const auto& [c, w] : u.entries()) p.steps.push_back(Split{Clause{}, c[0].var(), w});
  append(p.steps, d2.steps);
  p.target = d2.target;
  return p;
}

ProbeInputs pigeon_probe_inputs(const PigeonInstance& inst) {
  if (inst.variant != PigeonVariant::sphp && inst.variant != PigeonVariant::php)
    throw Error("probing construction expects php or sphp");
  const unsigned m = inst.m;
  const Var n = Var(m * (m + 1));
  ProbeInputs out;
  out.units = Formula(n);
  for (unsigned j = 1; j <= m; ++j) out.units.add(Clause{pos(pigeon_var(m, 1, j))}, Weight(1));

  out.d1.initial = inst.formula;
  out.d1.initial.add(out.units);
  for (unsigned j = 1; j <= m; ++j)
    for (unsigned k = 2; k <= m + 1; ++k) append(out.d1.steps, lemma1_steps(hole_column(m, j, k)));
  for (unsigned i = 2; i <= m + 1; ++i) push_pigeon(m, i, out.d1.steps);
  out.d1.target = {Clause{}, Weight(std::int64_t(m))};

  Formula rest = replay(out.d1);
  rest.add(Clause{}, Weight(-std::int64_t(m)));
  out.d2.initial = rest;
  for (unsigned j = 1; j <= m; ++j) out.d2.initial.add(Clause{neg(pigeon_var(m, 1, j))}, Weight(1));
  push_pigeon(m, 1, out.d2.steps);
  out.d2.target = {Clause{}, Weight(1)};
  return out;
}

namespace {

struct Conflict {
  std::vector<std::pair<Literal, Clause>> trail;  // implied literal and its reason
  Clause clause;
};

// SAT unit propagation over the clauses of f (□ ignored).
std::optional<Conflict> propagate(const Formula& f) {
  const Var n = f.num_vars();
  std::vector<int> value(n + 1, -1);  // -1 unassigned, else truth of the variable
  auto lit_value = [&](Literal l) {
    int v = value[l.var()];
    return v < 0 ? -1 : (v == (l.is_positive() ? 1 : 0) ? 1 : 0);
  };
  Conflict out;
  for (;;) {
    std::optional<Literal> best;
    const Clause* reason = nullptr;
    for (const auto& [c, w] : f.entries()) {
      if (c.empty() || !w.is_positive()) continue;
      std::optional<Literal> open;
      int unassigned = 0;
      bool sat = false;
      for (const auto& l : c.literals()) {
        int lv = lit_value(l);
        if (lv == 1) {
          sat = true;
          break;
        }
        if (lv < 0) {
          ++unassigned;
          open = l;
        }
      }
      if (sat) continue;
      if (unassigned == 0) {
        out.clause = c;
        return out;
      }
      if (unassigned == 1 && (!best || *open < *best)) {
        best = open;
        reason = &c;
      }
    }
    if (!best) return std::nullopt;
    value[best->var()] = best->is_positive() ? 1 : 0;
    out.trail.emplace_back(*best, *reason);
  }
}

}  // namespace

Saturation unit_saturate(const Formula& f, const SaturationOptions& opts) {
  if (f.has_negative()) throw Error("saturation needs positive weights");
  Saturation out;
  out.proof.initial = f;
  ProofState s(f);
  const Clause empty;

  while (out.proof.steps.size() < opts.max_steps) {
    Weight have = s.available(empty);
    if (have.is_infinite()) break;
    if (opts.target && have >= *opts.target) break;
    auto conflict = propagate(s.positive());
    if (!conflict) break;

    std::vector<std::pair<Literal, Clause>> chain;
    Clause c = conflict->clause;
    Weight m = s.available(c);
    for (auto it = conflict->trail.rbegin(); it != conflict->trail.rend(); ++it) {
      const auto& [lit, reason] = *it;
      if (!c.contains(~lit)) continue;
      chain.emplace_back(lit, reason);
      m = std::min(m, s.available(reason));
      c = reason.without(lit).join(c.without(~lit));
    }
    if (opts.target && (m.is_infinite() || m > *opts.target - have)) m = *opts.target - have;

    ProofState backup = s;
    std::size_t mark = out.proof.steps.size();
    Clause cur = conflict->clause;
    try {
      for (const auto& [lit, reason] : chain) {
        Resolution r{lit, reason, cur, m};
        s.apply(r);
        out.proof.steps.push_back(r);
        cur = resolvent(r);
      }
    } catch (const StepError&) {
      s = backup;
      out.proof.steps.resize(mark);
      break;
    }
  }
  out.derived = {empty, s.available(empty)};
  out.proof.target = out.derived;
  return out;
}

Clause rename_clause(const Clause& c, const std::vector<Var>& rename) {
  std::vector<Literal> lits;
  for (const auto& l : c.literals()) {
    if (l.var() >= rename.size()) throw Error("variable outside renaming");
    lits.emplace_back(rename[l.var()], l.is_negative());
  }
  return Clause(lits);
}

RuleApplication rename_step(const RuleApplication& a, const std::vector<Var>& rename) {
  if (auto* r = std::get_if<Resolution>(&a)) {
    if (r->pivot.var() >= rename.size()) throw Error("variable outside renaming");
    return Resolution{Literal(rename[r->pivot.var()], r->pivot.is_negative()), rename_clause(r->clause_a, rename),
                      rename_clause(r->clause_b, rename), r->amount};
  }
  if (auto* s = std::get_if<Split>(&a)) {
    if (s->var >= rename.size()) throw Error("variable outside renaming");
    return Split{rename_clause(s->clause, rename), rename[s->var], s->amount};
  }
  const auto& v = std::get<Virtual>(a);
  return Virtual{rename_clause(v.clause, rename), v.amount};
}

namespace {

// Shortest hard clause of f whose literals all occur in c.
std::optional<Clause> hard_subsumer(const Formula& f, const Clause& c) {
  for (const auto& [d, w] : f.entries()) {  // (size, literal) order: first hit is shortest
    if (!w.is_infinite() || d.size() > c.size()) continue;
    bool inside = true;
    for (const auto& l : d.literals()) inside = inside && c.contains(l);
    if (inside) return d;
  }
  return std::nullopt;
}

}  // namespace

DualRailSimulation build_dualrail_simulation(const Formula& f, const Proof* dual_refutation) {
  if (!f.is_hard()) throw Error("dual rail simulation needs a hard formula");
  const Var s = f.num_vars();
  DualRailSimulation out;
  auto& p = out.proof;
  p.initial = f;
  p.initial.ensure_vars(2 * s);
  for (Var i = 1; i <= s; ++i) {
    p.initial.add(Clause{pos(i), pos(s + i)}, Weight::infinity());
    p.initial.add(Clause{neg(i), neg(s + i)}, Weight::infinity());
  }

  // x_i ∨ A  becomes  ¬y_i ∨ A, one positive literal at a time
  for (const auto& [c, w] : f.entries()) {
    Clause cur = c;
    for (const auto& l : c.literals()) {
      if (!l.is_positive()) continue;
      Resolution r{l, cur, Clause{neg(l.var()), neg(s + l.var())}, Weight::infinity()};
      p.steps.push_back(r);
      cur = resolvent(r);
    }
  }
  if (s > 0) p.steps.push_back(Virtual{Clause{}, Weight(std::int64_t(s))});
  for (Var i = 1; i <= s; ++i) p.steps.push_back(Split{Clause{}, i, Weight(1)});
  for (Var i = 1; i <= s; ++i)
    p.steps.push_back(Resolution{neg(i), Clause{neg(i)}, Clause{pos(i), pos(s + i)}, Weight(1)});

  // n_i = i lives on y_i = s+i, p_i = s+i lives on x_i = i
  out.rename.assign(2 * s + 1, 0);
  for (Var i = 1; i <= s; ++i) {
    out.rename[i] = s + i;
    out.rename[s + i] = i;
  }

  if (dual_refutation) {
    // The simulated state holds extra hard clauses, so a compensation clause
    // of the dual proof may never appear here; it is subsumed by a hard one
    // instead and gets rebuilt from it by hard splits.
    ProofState st(p.initial);
    for (const auto& a : p.steps) st.apply(a);
    auto emit = [&](const RuleApplication& a) {
      st.apply(a);
      p.steps.push_back(a);
    };
    for (const auto& raw : dual_refutation->steps) {
      RuleApplication a = rename_step(raw, out.rename);
      for (const auto& c : antecedents(a)) {
        if (st.available(c) >= amount_of(a)) continue;
        auto sub = hard_subsumer(st.positive(), c);
        if (!sub) continue;  // left for the replay to report
        Clause cur = *sub;
        for (const auto& l : c.literals()) {
          if (cur.contains(l)) continue;
          emit(Split{cur, l.var(), Weight::infinity()});
          cur = cur.with(l);
        }
      }
      emit(a);
    }
    p.target = {Clause{}, Weight(1)};
  } else {
    p.target = {Clause{}, Weight(0)};
  }
  return out;
}

}  // namespace maxres
