#include "maxres/circular_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "maxres/error.hpp"

namespace maxres {

namespace {

bool is_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::string tag_name(NodeTag t) {
  switch (t) {
    case NodeTag::orig: return "orig";
    case NodeTag::budget: return "budget";
    case NodeTag::derived: return "derived";
  }
  return "derived";
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) throw Error("malformed rational '" + text + "'");
  BigInt d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw Error("zero denominator in '" + text + "'");
  return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

std::string rational_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

CircularFile parse_circular(std::istream& in) {
  CircularFile f;
  auto& g = f.proof.graph;
  std::map<std::string, std::size_t> nodes, infs;
  std::map<std::string, Rational> pending_flow;
  std::map<std::string, std::size_t> flow_line;
  std::optional<std::string> conclusion;
  std::size_t conclusion_line = 0;

  auto node_ref = [&](const std::string& id, std::size_t line) {
    auto it = nodes.find(id);
    if (it == nodes.end()) throw ParseError(line, "unknown node '" + id + "'");
    return it->second;
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') continue;
    const std::string& kw = tok[0];

    if (kw == "node") {
      if (tok.size() < 3) throw ParseError(line, "expected 'node <id> [tag] | <lits> 0'");
      const std::string& id = tok[1];
      if (nodes.contains(id)) throw ParseError(line, "duplicate node '" + id + "'");
      std::size_t bar = 2;
      NodeTag tag = NodeTag::derived;
      if (tok[2] != "|") {
        if (tok[2] == "orig") tag = NodeTag::orig;
        else if (tok[2] == "budget") tag = NodeTag::budget;
        else if (tok[2] == "derived") tag = NodeTag::derived;
        else throw ParseError(line, "unknown tag '" + tok[2] + "'");
        bar = 3;
      }
      if (bar >= tok.size() || tok[bar] != "|") throw ParseError(line, "missing '|' before literals");
      if (tok.back() != "0") throw ParseError(line, "literal list must end with 0");
      std::vector<std::int64_t> lits;
      for (std::size_t i = bar + 1; i + 1 < tok.size(); ++i) {
        if (!is_integer(tok[i])) throw ParseError(line, "bad literal '" + tok[i] + "'");
        auto v = std::stoll(tok[i]);
        if (v == 0) throw ParseError(line, "literal 0 inside a clause");
        lits.push_back(v);
      }
      nodes[id] = g.add_node(Clause::from_dimacs(lits), tag);
      f.node_ids.push_back(id);
    } else if (kw == "inf") {
      if (tok.size() < 5) throw ParseError(line, "expected 'inf <id> split|symres <in..> -> <out..>'");
      const std::string& id = tok[1];
      if (infs.contains(id)) throw ParseError(line, "duplicate inference '" + id + "'");
      CircularRule rule;
      if (tok[2] == "split") rule = CircularRule::split;
      else if (tok[2] == "symres") rule = CircularRule::symres;
      else throw ParseError(line, "unknown rule '" + tok[2] + "'");
      std::vector<std::size_t> ins, outs;
      bool arrow = false;
      for (std::size_t i = 3; i < tok.size(); ++i) {
        if (tok[i] == "->") {
          if (arrow) throw ParseError(line, "repeated '->'");
          arrow = true;
          continue;
        }
        (arrow ? outs : ins).push_back(node_ref(tok[i], line));
      }
      if (!arrow) throw ParseError(line, "missing '->'");
      infs[id] = g.add_inference(rule, std::move(ins), std::move(outs));
      f.inference_ids.push_back(id);
    } else if (kw == "flow") {
      if (tok.size() != 3) throw ParseError(line, "expected 'flow <inference> <p/q>'");
      if (pending_flow.contains(tok[1])) throw ParseError(line, "duplicate flow for '" + tok[1] + "'");
      try {
        pending_flow[tok[1]] = parse_rational(tok[2]);
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
      flow_line[tok[1]] = line;
    } else if (kw == "conclude") {
      if (tok.size() != 2) throw ParseError(line, "expected 'conclude <node>'");
      if (conclusion) throw ParseError(line, "second conclusion");
      conclusion = tok[1];
      conclusion_line = line;
    } else {
      throw ParseError(line, "unknown keyword '" + kw + "'");
    }
  }

  for (const auto& [id, q] : pending_flow) {
    auto it = infs.find(id);
    if (it == infs.end()) throw ParseError(flow_line[id], "flow for unknown inference '" + id + "'");
    f.proof.flow[it->second] = q;
  }
  if (!conclusion) throw ParseError(line, "missing 'conclude' line");
  g.conclusion = node_ref(*conclusion, conclusion_line);
  return f;
}

CircularFile parse_circular_string(const std::string& text) {
  std::istringstream in(text);
  return parse_circular(in);
}

CircularFile read_circular_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_circular(in);
}

void write_circular(std::ostream& out, const CircularProof& p) {
  const auto& g = p.graph;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "node c" << i + 1 << ' ' << tag_name(g.nodes[i].tag) << " |";
    for (auto l : g.nodes[i].clause.to_dimacs()) out << ' ' << l;
    out << " 0\n";
  }
  for (std::size_t j = 0; j < g.inferences.size(); ++j) {
    const auto& inf = g.inferences[j];
    out << "inf i" << j + 1 << (inf.rule == CircularRule::split ? " split" : " symres");
    for (auto i : inf.inputs) out << " c" << i + 1;
    out << " ->";
    for (auto o : inf.outputs) out << " c" << o + 1;
    out << "\n";
  }
  for (const auto& [j, q] : p.flow) out << "flow i" << j + 1 << ' ' << rational_string(q) << "\n";
  out << "conclude c" << g.conclusion + 1 << "\n";
}

std::string circular_string(const CircularProof& p) {
  std::ostringstream out;
  write_circular(out, p);
  return out.str();
}

void write_circular_file(const std::string& path, const CircularProof& p) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_circular(out, p);
}

}  // namespace maxres
