#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maxres/proof.hpp"

namespace maxres {

// Line-oriented proof trace:
//   p proof <instance.wcnf>
//   res <pivot-lit> <amount> | <clause A> 0 | <clause B> 0
//   split <var> <amount> | <clause> 0
//   virt <amount> | <clause> 0
//   target <weight> | <clause> 0
// Amounts are positive integers or "inf". Lines starting with "c" are comments.
struct ProofTrace {
  std::string source;
  std::vector<RuleApplication> steps;
  std::optional<WeightedClause> target;
};

ProofTrace parse_proof(std::istream& in);
ProofTrace parse_proof_string(const std::string& text);
ProofTrace read_proof_file(const std::string& path);

std::string format_step(const RuleApplication& a);
void write_proof(std::ostream& out, const Proof& p);
std::string proof_string(const Proof& p);
void write_proof_file(const std::string& path, const Proof& p);

// Combines a parsed trace with its instance; a missing target line becomes (□, 0).
Proof make_proof(const Formula& initial, const ProofTrace& trace);

}  // namespace maxres
