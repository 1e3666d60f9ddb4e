#pragma once

#include <cstdint>

#include "maxres/formula.hpp"
#include "maxres/kernels/cost_kernel.hpp"

namespace maxres {

struct OracleConfig {
  Var bound = 24;  // largest universe the oracle will enumerate
  kernels::Isa isa = kernels::Isa::automatic;
};

struct OracleResult {
  Weight optimum;
  Assignment witness;  // first minimizer in enumeration order
  std::uint64_t assignments_checked = 0;
};

// Exact MaxSAT by enumerating every assignment of the formula's universe.
// Enumeration is lexicographic with variable 1 most significant.
OracleResult maxsat_bruteforce(const Formula& f, const OracleConfig& cfg = {});

// cost(f, X) >= cost(g, X) for every X over the joint universe.
bool entails_direct(const Formula& f, const Formula& g, const OracleConfig& cfg = {});

// One more than the largest finite cost of f (at least 1); 1 when no
// assignment has finite cost.
Weight gamma_of(const Formula& f, const OracleConfig& cfg = {});

struct ReducedEntailment {
  bool entailed = false;
  Weight optimum;  // MaxSAT of f together with the negated capped g
  Weight roof;     // roof of the capped g
  Weight gamma;
};

// Entailment through a single optimisation call: hard weights of g are
// capped at gamma_of(f), g is negated and conjoined with f, and the optimum
// is compared with the capped roof. A clause (□, w) of g negates to nothing.
ReducedEntailment entails_reduced_detail(const Formula& f, const Formula& g, const OracleConfig& cfg = {});
inline bool entails_reduced(const Formula& f, const Formula& g, const OracleConfig& cfg = {}) {
  return entails_reduced_detail(f, g, cfg).entailed;
}

bool equivalent(const Formula& f, const Formula& g, const OracleConfig& cfg = {});

// g with every infinite weight replaced by `cap`.
Formula cap_hard(const Formula& g, const Weight& cap);

}  // namespace maxres
