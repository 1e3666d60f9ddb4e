#pragma once

#include <random>

#include "maxres/generators.hpp"
#include "maxres/oracle.hpp"
#include "maxres/proof.hpp"
#include "test_util.hpp"

namespace maxres::testing {

inline constexpr int kInstances = 1000;

// Seeded instance source; weights in 1..5 or infinity.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

  Clause clause(Var vars, std::size_t max_len) {
    std::vector<Literal> lits;
    std::size_t len = below(std::min<std::size_t>(max_len, vars) + 1);
    while (lits.size() < len) {
      Var v = Var(1 + below(vars));
      bool taken = false;
      for (auto l : lits) taken = taken || l.var() == v;
      if (!taken) lits.push_back(coin(0.5) ? Literal::positive(v) : Literal::negative(v));
    }
    return Clause(lits);
  }

  Weight weight(double hard) { return coin(hard) ? Weight::infinity() : Weight(std::int64_t(1 + below(5))); }

  Formula formula(Var vars, std::size_t clauses, double hard, std::size_t max_len = 3) {
    Formula f(vars);
    for (std::size_t i = 0; i < clauses; ++i) {
      Clause c = clause(vars, max_len);
      if (c.empty() && coin(0.7)) continue;
      f.add(c, weight(hard));
    }
    return f;
  }
};

// A rule application that is legal in `f`, or nullopt when none was found.
inline std::optional<RuleApplication> legal_rule(Gen& g, const Formula& f, Var vars) {
  auto entries = f.clauses();
  if (entries.empty() || g.coin(0.15)) return Virtual{g.clause(vars, 3), Weight(std::int64_t(1 + g.below(5)))};
  auto amount_for = [&](const Weight& a, const Weight& b) {
    if (a.is_infinite() && b.is_infinite() && g.coin(0.5)) return Weight::infinity();
    Weight cap = a.is_infinite() ? b : (b.is_infinite() || a < b ? a : b);
    if (cap.is_infinite()) cap = Weight(5);
    return Weight(std::int64_t(1 + g.below(cap.value().convert_to<std::uint64_t>())));
  };
  if (g.coin(0.5)) {
    const auto& e = entries[g.below(entries.size())];
    std::vector<Var> free;
    for (Var v = 1; v <= vars; ++v)
      if (!e.clause.contains_var(v)) free.push_back(v);
    if (free.empty()) return std::nullopt;
    Weight m = e.weight.is_infinite() && g.coin(0.5) ? Weight::infinity() : amount_for(e.weight, e.weight);
    return Split{e.clause, free[g.below(free.size())], m};
  }
  std::vector<Resolution> options;
  for (const auto& a : entries)
    for (const auto& b : entries)
      for (auto l : a.clause.literals())
        if (b.clause.contains(~l)) options.push_back({l, a.clause, b.clause, Weight(0)});
  if (options.empty()) return std::nullopt;
  Resolution r = options[g.below(options.size())];
  r.amount = amount_for(f.weight(r.clause_a), f.weight(r.clause_b));
  return r;
}

// Each check walks kInstances seeded instances; it returns "" on success
// or a description of the first counterexample.

inline std::string check_rules_preserve_cost(std::uint64_t seed, int* applied = nullptr) {
  Gen g(seed);
  int count = 0;
  for (int n = 0; n < kInstances; ++n) {
    Var vars = Var(1 + g.below(10));
    Formula f = g.formula(vars, 1 + g.below(8), 0.2);
    ProofState s(f);
    for (int k = 0; k < 3; ++k) {
      auto a = legal_rule(g, s.positive(), vars);
      if (!a) break;
      try {
        s.apply(*a);
      } catch (const std::exception& e) {
        return "instance " + std::to_string(n) + ": legal " + rule_name(*a) + " rejected (" + e.what() + ")";
      }
      ++count;
      if (!same_costs(f, s.merged(), vars))
        return "instance " + std::to_string(n) + ": cost changed after " + rule_name(*a);
    }
  }
  if (applied) *applied = count;
  return "";
}

inline std::string check_entailment_reduction(std::uint64_t seed, int* entailed = nullptr) {
  Gen g(seed);
  int yes = 0;
  for (int n = 0; n < kInstances; ++n) {
    Var vars = Var(1 + g.below(10));
    Formula f = g.formula(vars, 1 + g.below(7), 0.25);
    Formula h = g.coin(0.4) ? f : Formula(vars);  // bias toward entailed pairs
    if (h.empty()) h = g.formula(vars, 1 + g.below(4), 0.25);
    else h.erase(h.clauses()[g.below(h.size())].clause);
    bool direct = entails_direct(f, h);
    if (direct != entails_reduced(f, h))
      return "instance " + std::to_string(n) + ": F = " + f.to_string() + ", G = " + h.to_string();
    yes += direct;
  }
  if (entailed) *entailed = yes;
  return "";
}

inline std::string check_negation_roof(std::uint64_t seed) {
  Gen g(seed);
  for (int n = 0; n < kInstances; ++n) {
    Var vars = Var(1 + g.below(10));
    Formula f = g.formula(vars, 1 + g.below(8), 0.0);
    f.erase(Clause());
    Formula neg = negate_formula(f);
    Weight r = roof(f);
    for (std::uint64_t k = 0; k < (std::uint64_t(1) << vars); ++k) {
      auto x = Assignment::from_index(k, vars);
      if (cost(f, x) + cost(neg, x) != r) return "instance " + std::to_string(n) + ": F = " + f.to_string();
    }
  }
  return "";
}

inline std::string check_dual_rail(std::uint64_t seed, int* satisfiable = nullptr) {
  Gen g(seed);
  int sat = 0;
  for (int n = 0; n < kInstances; ++n) {
    Var s = Var(1 + g.below(4));
    Formula f = g.formula(s, 1 + g.below(7), 1.0);
    f.erase(Clause());
    Weight opt = maxsat_bruteforce(dual_rail_encode(f)).optimum;
    bool is_sat = maxsat_bruteforce(f).optimum.is_zero();
    const Weight sw{std::int64_t(s)};
    if (opt < sw || is_sat != (opt == sw)) return "instance " + std::to_string(n) + ": F = " + f.to_string();
    sat += is_sat;
  }
  if (satisfiable) *satisfiable = sat;
  return "";
}

}  // namespace maxres::testing
