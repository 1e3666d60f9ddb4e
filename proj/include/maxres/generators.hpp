#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "maxres/formula.hpp"

namespace maxres {

enum class PigeonVariant { php, sphp, sphp0, sphp1 };

std::string_view variant_name(PigeonVariant v);
PigeonVariant parse_variant(std::string_view name);

// Pigeon i in hole j is variable (i-1)*m + j, pigeons 1..m+1, holes 1..m.
inline Var pigeon_var(unsigned m, unsigned i, unsigned j) { return Var((i - 1) * m + j); }

struct PigeonInstance {
  unsigned m = 0;
  PigeonVariant variant = PigeonVariant::php;
  std::vector<WeightedClause> clauses;  // as generated, before merging
  Formula formula;

  Var var(unsigned i, unsigned j) const { return pigeon_var(m, i, j); }
};

// PHP: every clause hard. SPHP: every clause weight 1. SPHP0 adds
// (□, m²+m). SPHP1 adds both unit literals of every variable at weight 1.
PigeonInstance gen_pigeonhole(PigeonVariant variant, unsigned m);

// Horn encoding of a hard formula over x1..xs: x_i becomes ¬n_i, ¬x_i
// becomes ¬p_i, plus (p_i,1), (n_i,1), (¬p_i ∨ ¬n_i, ∞). n_i = i, p_i = s+i,
// where s is the declared universe of f.
Formula dual_rail_encode(const Formula& f);

// Seeded instance for property tests: clause lengths 1..min(vars,3) over
// distinct variables, no duplicate clauses, weights 1..max_weight, each
// clause hard with probability hard_fraction. Deterministic per seed.
Formula random_formula(Var vars, std::size_t clauses, std::uint64_t max_weight, double hard_fraction,
                       std::uint64_t seed);

}  // namespace maxres
