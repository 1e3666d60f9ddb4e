#include "maxres/generators.hpp"

#include <random>
#include <set>

#include "maxres/error.hpp"

namespace maxres {

std::string_view variant_name(PigeonVariant v) {
  switch (v) {
    case PigeonVariant::php: return "php";
    case PigeonVariant::sphp: return "sphp";
    case PigeonVariant::sphp0: return "sphp0";
    case PigeonVariant::sphp1: return "sphp1";
  }
  return "?";
}

PigeonVariant parse_variant(std::string_view name) {
  for (auto v : {PigeonVariant::php, PigeonVariant::sphp, PigeonVariant::sphp0, PigeonVariant::sphp1})
    if (variant_name(v) == name) return v;
  throw Error("unknown pigeonhole variant '" + std::string(name) + "'");
}

PigeonInstance gen_pigeonhole(PigeonVariant variant, unsigned m) {
  if (m == 0) throw Error("pigeonhole needs m >= 1");
  PigeonInstance inst;
  inst.m = m;
  inst.variant = variant;
  const Weight w = variant == PigeonVariant::php ? Weight::infinity() : Weight(1);

  for (unsigned i = 1; i <= m + 1; ++i) {
    std::vector<Literal> lits;
    for (unsigned j = 1; j <= m; ++j) lits.push_back(Literal::positive(pigeon_var(m, i, j)));
    inst.clauses.push_back({Clause(lits), w});
  }
  for (unsigned j = 1; j <= m; ++j)
    for (unsigned i = 1; i <= m + 1; ++i)
      for (unsigned k = i + 1; k <= m + 1; ++k)
        inst.clauses.push_back(
            {Clause{Literal::negative(pigeon_var(m, i, j)), Literal::negative(pigeon_var(m, k, j))}, w});

  if (variant == PigeonVariant::sphp0) inst.clauses.push_back({Clause{}, Weight(std::int64_t(m) * m + m)});
  if (variant == PigeonVariant::sphp1) {
    for (unsigned i = 1; i <= m + 1; ++i)
      for (unsigned j = 1; j <= m; ++j) {
        inst.clauses.push_back({Clause{Literal::positive(pigeon_var(m, i, j))}, Weight(1)});
        inst.clauses.push_back({Clause{Literal::negative(pigeon_var(m, i, j))}, Weight(1)});
      }
  }
  inst.formula = normalize(inst.clauses, Var(m * (m + 1)));
  return inst;
}

Formula dual_rail_encode(const Formula& f) {
  const Var s = f.num_vars();
  Formula out(2 * s);
  for (const auto& [c, w] : f.entries()) {
    if (!w.is_infinite()) throw Error("dual rail encoding needs a hard formula (soft input clause)");
    std::vector<Literal> lits;
    for (const auto& l : c.literals())
      lits.push_back(l.is_positive() ? Literal::negative(l.var()) : Literal::negative(s + l.var()));
    out.add(Clause(lits), Weight::infinity());
  }
  for (Var i = 1; i <= s; ++i) {
    out.add(Clause{Literal::positive(s + i)}, Weight(1));
    out.add(Clause{Literal::positive(i)}, Weight(1));
    out.add(Clause{Literal::negative(i), Literal::negative(s + i)}, Weight::infinity());
  }
  return out;
}

Formula random_formula(Var vars, std::size_t clauses, std::uint64_t max_weight, double hard_fraction,
                       std::uint64_t seed) {
  Formula f(vars);
  if (vars == 0 || clauses == 0) return f;
  if (max_weight == 0) max_weight = 1;
  // plain modulo sampling: distributions in <random> are not portable
  std::mt19937_64 rng(seed);
  const Var max_len = std::min<Var>(vars, 3);
  std::set<Clause> seen;
  std::size_t attempts = 0;
  while (seen.size() < clauses && attempts < clauses * 50) {
    ++attempts;
    Var len = 1 + Var(rng() % max_len);
    std::set<Var> picked;
    while (picked.size() < len) picked.insert(1 + Var(rng() % vars));
    std::vector<Literal> lits;
    for (Var v : picked) lits.emplace_back(v, (rng() & 1) != 0);
    Clause c(lits);
    if (!seen.insert(c).second) continue;
    double u = double(rng() >> 11) * 0x1.0p-53;
    Weight w = u < hard_fraction ? Weight::infinity() : Weight(std::int64_t(1 + rng() % max_weight));
    f.add(c, w);
  }
  return f;
}

}  // namespace maxres
