#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "maxres/weight.hpp"

namespace maxres {

using Var = std::uint32_t;

// A variable (index >= 1) with a sign. Ordered by variable, then positive
// before negative; this is the canonical literal order used everywhere.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool negative) : var_(var), negative_(negative) {}

  static Literal positive(Var v) { return {v, false}; }
  static Literal negative(Var v) { return {v, true}; }
  // Signed DIMACS integer; 0 is rejected.
  static Literal from_dimacs(std::int64_t lit);

  Var var() const { return var_; }
  bool is_negative() const { return negative_; }
  bool is_positive() const { return !negative_; }
  std::int64_t to_dimacs() const { return negative_ ? -std::int64_t(var_) : std::int64_t(var_); }

  Literal operator~() const { return {var_, !negative_}; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.var_ <=> b.var_; c != 0) return c;
    return a.negative_ <=> b.negative_;
  }

 private:
  Var var_ = 0;
  bool negative_ = false;
};

// A disjunction of literals kept sorted in canonical order without
// duplicates. Tautologies are representable; Formula never stores them.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals) : Clause(std::vector<Literal>(literals)) {}

  static Clause from_dimacs(std::span<const std::int64_t> lits);
  static Clause from_dimacs(std::initializer_list<std::int64_t> lits) {
    return from_dimacs(std::span<const std::int64_t>(lits.begin(), lits.size()));
  }

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  const Literal& operator[](std::size_t i) const { return lits_[i]; }

  bool contains(Literal l) const;
  bool contains_var(Var v) const;
  bool is_tautology() const;
  Var max_var() const { return lits_.empty() ? 0 : lits_.back().var(); }

  Clause with(Literal l) const;
  Clause without(Literal l) const;
  // Disjunction of both literal sets.
  Clause join(const Clause& other) const;

  std::vector<std::int64_t> to_dimacs() const;
  // "□" for the empty clause, otherwise space separated DIMACS literals.
  std::string to_string() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  // Shorter clauses first, then lexicographic by literal.
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> lits_;
};

struct WeightedClause {
  Clause clause;
  Weight weight;

  friend bool operator==(const WeightedClause&, const WeightedClause&) = default;
  std::string to_string() const;
};

// A weighted CNF formula: one merged entry per canonical clause and a
// declared universe of variables 1..num_vars. Tautologies and zero weights
// are dropped on insertion; equal clauses add up their weights.
class Formula {
 public:
  using Entries = std::map<Clause, Weight>;

  Formula() = default;
  explicit Formula(Var num_vars) : num_vars_(num_vars) {}

  void add(const Clause& clause, const Weight& weight);
  void add(const WeightedClause& wc) { add(wc.clause, wc.weight); }
  void add(const Formula& other);

  // Zero when the clause is absent.
  Weight weight(const Clause& clause) const;
  bool contains(const Clause& clause) const { return entries_.contains(clause); }
  void erase(const Clause& clause) { entries_.erase(clause); }

  const Entries& entries() const { return entries_; }
  std::vector<WeightedClause> clauses() const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Var num_vars() const { return num_vars_; }
  void ensure_vars(Var n) {
    if (n > num_vars_) num_vars_ = n;
  }

  bool has_negative() const;
  bool has_hard() const;
  bool is_hard() const;  // every entry infinite (vacuously true when empty)
  bool is_soft() const { return !has_hard(); }

  friend bool operator==(const Formula&, const Formula&) = default;
  std::string to_string() const;

 private:
  Entries entries_;
  Var num_vars_ = 0;
};

// Total truth assignment over variables 1..size().
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  // Assignment number `index` in lexicographic enumeration order: variable 1
  // is the most significant bit, so index 0 is all-false.
  static Assignment from_index(std::uint64_t index, Var num_vars);
  // The listed literals are true, every other variable up to num_vars false.
  static Assignment from_literals(std::span<const Literal> true_literals, Var num_vars);

  Var size() const { return static_cast<Var>(values_.size()); }
  bool value(Var v) const { return values_.at(v - 1); }
  bool satisfies(Literal l) const { return value(l.var()) != l.is_negative(); }
  bool satisfies(const Clause& c) const;
  std::string to_string() const;  // signed DIMACS literals

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

Formula normalize(std::span<const WeightedClause> entries, Var num_vars = 0);
inline Formula normalize(std::initializer_list<WeightedClause> entries, Var num_vars = 0) {
  return normalize(std::span<const WeightedClause>(entries.begin(), entries.size()), num_vars);
}

// Sum of the weights of the clauses falsified by `x`.
Weight cost(const Formula& f, const Assignment& x);

// Sum of all weights.
Weight roof(const Formula& f);

// CNF expansion of the negation: (¬l1), (l1 ∨ ¬l2), ..., (l1 ∨ … ∨ ¬lp),
// each carrying the clause's weight, in canonical literal order.
Formula negate_clause(const WeightedClause& wc);

// Appends to `out` the CNF expansion of (prefix ∨ ¬tail), weight w, in the
// canonical order of `tail`. Tautologies and repeated literals are dropped.
void expand_negated_tail(const Clause& prefix, const Clause& tail, const Weight& w, Formula& out);

Formula negate_formula(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Clause& c);
std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace maxres
