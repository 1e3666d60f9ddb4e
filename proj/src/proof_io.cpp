#include "maxres/proof_io.hpp"

#include <fstream>
#include <sstream>

namespace maxres {

namespace {

std::string lits(const Clause& c) {
  std::string s;
  for (auto l : c.to_dimacs()) s += std::to_string(l) + " ";
  return s + "0";
}

struct Line {
  std::vector<std::string> head;
  std::vector<std::vector<std::string>> parts;  // one per "|" segment
};

Line split_line(const std::string& raw) {
  Line out;
  std::istringstream ls(raw);
  std::string tok;
  std::vector<std::string>* cur = &out.head;
  while (ls >> tok) {
    if (tok == "|") {
      out.parts.emplace_back();
      cur = &out.parts.back();
      continue;
    }
    cur->push_back(tok);
  }
  return out;
}

std::int64_t to_int(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, "expected an integer, got '" + tok + "'");
}

Clause clause_of(const std::vector<std::string>& toks, std::size_t line) {
  if (toks.empty() || toks.back() != "0") throw ParseError(line, "literal list must end with 0");
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    auto x = to_int(toks[i], line);
    if (x == 0) throw ParseError(line, "literal 0 inside a clause");
    v.push_back(x);
  }
  return Clause::from_dimacs(v);
}

Weight weight_of(const std::string& tok, std::size_t line) {
  try {
    return Weight::parse(tok);
  } catch (const Error&) {
    throw ParseError(line, "bad amount '" + tok + "'");
  }
}

void expect(bool ok, std::size_t line, const std::string& what) {
  if (!ok) throw ParseError(line, what);
}

}  // namespace

std::string format_step(const RuleApplication& a) {
  if (auto* r = std::get_if<Resolution>(&a))
    return "res " + std::to_string(r->pivot.to_dimacs()) + " " + r->amount.to_string() + " | " + lits(r->clause_a) +
           " | " + lits(r->clause_b);
  if (auto* s = std::get_if<Split>(&a))
    return "split " + std::to_string(s->var) + " " + s->amount.to_string() + " | " + lits(s->clause);
  const auto& v = std::get<Virtual>(a);
  return "virt " + v.amount.to_string() + " | " + lits(v.clause);
}

ProofTrace parse_proof(std::istream& in) {
  ProofTrace t;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    Line l = split_line(raw);
    if (l.head.empty() && l.parts.empty()) continue;
    expect(!l.head.empty(), line, "missing keyword");
    const std::string& kw = l.head[0];
    if (kw[0] == 'c') continue;
    expect(!t.target, line, "content after target line");
    if (kw == "p") {
      expect(!header && t.steps.empty(), line, "misplaced header");
      expect(l.head.size() >= 2 && l.head[1] == "proof", line, "header must be 'p proof <instance>'");
      t.source = l.head.size() >= 3 ? l.head[2] : "";
      header = true;
    } else if (kw == "res") {
      expect(l.head.size() == 3 && l.parts.size() == 2, line, "expected 'res <pivot> <amount> | A 0 | B 0'");
      auto pivot = to_int(l.head[1], line);
      expect(pivot != 0, line, "pivot literal 0");
      t.steps.push_back(Resolution{Literal::from_dimacs(pivot), clause_of(l.parts[0], line),
                                   clause_of(l.parts[1], line), weight_of(l.head[2], line)});
    } else if (kw == "split") {
      expect(l.head.size() == 3 && l.parts.size() == 1, line, "expected 'split <var> <amount> | C 0'");
      auto v = to_int(l.head[1], line);
      expect(v > 0 && v <= std::int64_t(UINT32_MAX), line, "split variable must be positive");
      t.steps.push_back(Split{clause_of(l.parts[0], line), Var(v), weight_of(l.head[2], line)});
    } else if (kw == "virt") {
      expect(l.head.size() == 2 && l.parts.size() == 1, line, "expected 'virt <amount> | C 0'");
      t.steps.push_back(Virtual{clause_of(l.parts[0], line), weight_of(l.head[1], line)});
    } else if (kw == "target") {
      expect(l.head.size() == 2 && l.parts.size() == 1, line, "expected 'target <weight> | C 0'");
      t.target = WeightedClause{clause_of(l.parts[0], line), weight_of(l.head[1], line)};
    } else {
      throw ParseError(line, "unknown keyword '" + kw + "'");
    }
  }
  return t;
}

ProofTrace parse_proof_string(const std::string& text) {
  std::istringstream in(text);
  return parse_proof(in);
}

ProofTrace read_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_proof(in);
}

void write_proof(std::ostream& out, const Proof& p) {
  out << "p proof " << (p.source.empty() ? "-" : p.source) << "\n";
  for (const auto& a : p.steps) out << format_step(a) << "\n";
  out << "target " << p.target.weight << " | " << lits(p.target.clause) << "\n";
}

std::string proof_string(const Proof& p) {
  std::ostringstream out;
  write_proof(out, p);
  return out.str();
}

void write_proof_file(const std::string& path, const Proof& p) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_proof(out, p);
}

Proof make_proof(const Formula& initial, const ProofTrace& trace) {
  Proof p;
  p.initial = initial;
  p.steps = trace.steps;
  p.target = trace.target.value_or(WeightedClause{Clause{}, Weight(0)});
  p.source = trace.source;
  return p;
}

}  // namespace maxres
