#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxres/generators.hpp"
#include "maxres/proof.hpp"

namespace maxres {

// Step count of build_sphp1_refutation is at most this times m³ for every m >= 1.
inline constexpr std::size_t kSphp1LengthConstant = 4;

// Resolutions that turn (y1 ∨ … ∨ y_{n-1}, 1) and (¬y_i ∨ ¬y_n, 1), i < n,
// into (¬y_n, 1) and (y1 ∨ … ∨ y_n, 1), plus leftover compensation clauses.
// Exactly n-1 steps.
std::vector<RuleApplication> lemma1_steps(const std::vector<Var>& y);

// Stand-alone chain over variables 1..n with its input formula.
Proof lemma1_chain(std::size_t n);

// Resolution steps refuting the unit-augmented pigeon clauses: one unit of
// □ per pigeon and m per hole. Holes and pigeons go in ascending order.
std::vector<RuleApplication> pigeon_core_steps(unsigned m);

Proof build_sphp1_refutation(unsigned m);    // (□, m²+m+1), resolution only
Proof build_sphp0_refutation(unsigned m);    // (□, m²+m+1), splits then the above
Proof build_sphp_refutation(unsigned m);     // (□, 1), with virtual unit pairs
Proof build_php_lb1_refutation(unsigned m);  // (□, 1) from the hard formula

// ---- soft probing ----

// Requires U to be unit clauses with positive finite weights and no
// complementary pair. d1 must be a resolution-only proof from F ∪ U of
// (□, k) with k the roof of U; d2 a resolution-only proof from the rest of
// d1's final formula plus the complemented units. Both are replayed.
Proof soft_probe(const Formula& f, const Formula& u, const Proof& d1, const Proof& d2);

struct ProbeInputs {
  Formula units;
  Proof d1;
  Proof d2;
};

// U = {(x_1j, 1)}: d1 runs the hole chains up to the last hole literal and
// then refutes pigeons 2..m+1; d2 refutes pigeon 1.
ProbeInputs pigeon_probe_inputs(const PigeonInstance& inst);

struct SaturationOptions {
  std::optional<Weight> target;  // stop once □ reaches this weight
  std::size_t max_steps = 100000;
};

struct Saturation {
  Proof proof;  // resolution only; target (□, derived)
  WeightedClause derived;
};

// Repeated unit propagation over the positive clauses. Every conflict is
// turned into a chain of MaxSAT resolutions (trail order, most recent first)
// moving the smallest weight involved to □. Units are propagated lowest
// variable first, positive literal first; reasons are the first clause in
// (size, literal) order that becomes unit.
Saturation unit_saturate(const Formula& f, const SaturationOptions& opts = {});

// ---- dual rail ----

struct DualRailSimulation {
  Proof proof;
  // dual-rail variable v is variable rename[v] here (index 0 unused)
  std::vector<Var> rename;
};

// From hard f over x1..xs plus aliases (x_i ∨ y_i, ∞), (¬x_i ∨ ¬y_i, ∞)
// with y_i = s+i: rewrite positive literals through the aliases, add
// (□,s)/(□,-s), split (□,1) on every x_i and resolve each (¬x_i,1) into
// (y_i,1). The result holds the dual rail encoding up to renaming. When a
// refutation of the encoding with (□, s+1) is given it is renamed and
// appended, and the target becomes (□,1).
DualRailSimulation build_dualrail_simulation(const Formula& f, const Proof* dual_refutation = nullptr);

Clause rename_clause(const Clause& c, const std::vector<Var>& rename);
RuleApplication rename_step(const RuleApplication& a, const std::vector<Var>& rename);

}  // namespace maxres
