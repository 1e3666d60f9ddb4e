#include "maxres/formula.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "maxres/error.hpp"

namespace maxres {

Literal Literal::from_dimacs(std::int64_t lit) {
  if (lit == 0) throw Error("literal 0 is not a variable");
  if (lit > std::int64_t(UINT32_MAX) || -lit > std::int64_t(UINT32_MAX))
    throw Error("variable index out of range: " + std::to_string(lit));
  return lit > 0 ? positive(Var(lit)) : negative(Var(-lit));
}

Clause::Clause(std::vector<Literal> literals) : lits_(std::move(literals)) {
  for (const auto& l : lits_)
    if (l.var() == 0) throw Error("variable index must be at least 1");
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause Clause::from_dimacs(std::span<const std::int64_t> lits) {
  std::vector<Literal> v;
  v.reserve(lits.size());
  for (auto x : lits) v.push_back(Literal::from_dimacs(x));
  return Clause(std::move(v));
}

bool Clause::contains(Literal l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

bool Clause::contains_var(Var v) const {
  return contains(Literal::positive(v)) || contains(Literal::negative(v));
}

bool Clause::is_tautology() const {
  // sorted: complementary pairs are adjacent
  for (std::size_t i = 1; i < lits_.size(); ++i)
    if (lits_[i].var() == lits_[i - 1].var()) return true;
  return false;
}

Clause Clause::with(Literal l) const {
  Clause c = *this;
  auto it = std::lower_bound(c.lits_.begin(), c.lits_.end(), l);
  if (it == c.lits_.end() || *it != l) c.lits_.insert(it, l);
  return c;
}

Clause Clause::without(Literal l) const {
  Clause c = *this;
  auto it = std::lower_bound(c.lits_.begin(), c.lits_.end(), l);
  if (it != c.lits_.end() && *it == l) c.lits_.erase(it);
  return c;
}

Clause Clause::join(const Clause& other) const {
  Clause c;
  c.lits_.reserve(lits_.size() + other.lits_.size());
  std::set_union(lits_.begin(), lits_.end(), other.lits_.begin(), other.lits_.end(),
                 std::back_inserter(c.lits_));
  return c;
}

std::vector<std::int64_t> Clause::to_dimacs() const {
  std::vector<std::int64_t> out;
  out.reserve(lits_.size());
  for (const auto& l : lits_) out.push_back(l.to_dimacs());
  return out;
}

std::string Clause::to_string() const {
  if (lits_.empty()) return "□";
  std::string s;
  for (const auto& l : lits_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l.to_dimacs());
  }
  return s;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  if (auto c = a.lits_.size() <=> b.lits_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.lits_.begin(), a.lits_.end(), b.lits_.begin(),
                                                b.lits_.end());
}

std::string WeightedClause::to_string() const {
  return "(" + clause.to_string() + ", " + weight.to_string() + ")";
}

void Formula::add(const Clause& clause, const Weight& weight) {
  ensure_vars(clause.max_var());
  if (weight.is_zero() || clause.is_tautology()) return;
  auto [it, inserted] = entries_.try_emplace(clause, weight);
  if (inserted) return;
  it->second += weight;
  if (it->second.is_zero()) entries_.erase(it);
}

void Formula::add(const Formula& other) {
  ensure_vars(other.num_vars_);
  for (const auto& [c, w] : other.entries_) add(c, w);
}

Weight Formula::weight(const Clause& clause) const {
  auto it = entries_.find(clause);
  return it == entries_.end() ? Weight(0) : it->second;
}

std::vector<WeightedClause> Formula::clauses() const {
  std::vector<WeightedClause> out;
  out.reserve(entries_.size());
  for (const auto& [c, w] : entries_) out.push_back({c, w});
  return out;
}

bool Formula::has_negative() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.is_negative(); });
}

bool Formula::has_hard() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.is_infinite(); });
}

bool Formula::is_hard() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.is_infinite(); });
}

std::string Formula::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [c, w] : entries_) {
    if (!first) s += ", ";
    first = false;
    s += "(" + c.to_string() + ", " + w.to_string() + ")";
  }
  return s + "}";
}

Assignment Assignment::from_index(std::uint64_t index, Var num_vars) {
  if (num_vars > 64) throw Error("assignment index supports at most 64 variables");
  std::vector<bool> v(num_vars);
  for (Var i = 1; i <= num_vars; ++i) v[i - 1] = (index >> (num_vars - i)) & 1u;
  return Assignment(std::move(v));
}

Assignment Assignment::from_literals(std::span<const Literal> true_literals, Var num_vars) {
  std::vector<bool> v(num_vars);
  for (const auto& l : true_literals) {
    if (l.var() > num_vars) throw Error("literal outside assignment range");
    v[l.var() - 1] = l.is_positive();
  }
  return Assignment(std::move(v));
}

bool Assignment::satisfies(const Clause& c) const {
  for (const auto& l : c.literals())
    if (satisfies(l)) return true;
  return false;
}

std::string Assignment::to_string() const {
  std::string s;
  for (Var v = 1; v <= size(); ++v) {
    if (!s.empty()) s += ' ';
    s += value(v) ? std::to_string(v) : "-" + std::to_string(v);
  }
  return s;
}

Formula normalize(std::span<const WeightedClause> entries, Var num_vars) {
  Formula f(num_vars);
  for (const auto& wc : entries) f.add(wc);
  return f;
}

Weight cost(const Formula& f, const Assignment& x) {
  if (x.size() < f.num_vars()) throw Error("incomplete assignment");
  Weight total = 0;
  for (const auto& [c, w] : f.entries()) {
    if (c.max_var() > x.size()) throw Error("incomplete assignment");
    if (!x.satisfies(c)) {
      total += w;
      if (total.is_infinite()) return total;
    }
  }
  return total;
}

Weight roof(const Formula& f) {
  Weight total = 0;
  for (const auto& [c, w] : f.entries()) total += w;
  return total;
}

void expand_negated_tail(const Clause& prefix, const Clause& tail, const Weight& w, Formula& out) {
  Clause acc = prefix;
  for (const auto& l : tail.literals()) {
    Clause c = acc.with(~l);
    out.add(c, w);  // tautologies vanish inside add
    acc = acc.with(l);
  }
}

Formula negate_clause(const WeightedClause& wc) {
  if (wc.clause.empty()) throw Error("negation of empty clause undefined");
  if (!wc.weight.is_positive()) throw Error("negation requires a positive weight");
  Formula out(wc.clause.max_var());
  expand_negated_tail(Clause{}, wc.clause, wc.weight, out);
  return out;
}

Formula negate_formula(const Formula& f) {
  Formula out(f.num_vars());
  for (const auto& [c, w] : f.entries()) out.add(negate_clause({c, w}));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Clause& c) { return os << c.to_string(); }
std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << f.to_string(); }

}  // namespace maxres
