#include "maxres/wcnf.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "maxres/error.hpp"

namespace maxres {

namespace {

std::int64_t parse_literal(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "bad literal '" + tok + "'");
  }
}

}  // namespace

Formula parse_wcnf(std::istream& in, const WcnfOptions& opts) {
  Formula f;
  std::optional<Weight> top;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "c") {
      std::string key;
      Var n = 0;
      if (ls >> key && key == "vars" && ls >> n) f.ensure_vars(n);
      continue;
    }
    if (head[0] == 'c') continue;
    if (head == "p") {
      std::string fmt;
      ls >> fmt;
      if (fmt != "wcnf") throw ParseError(line, "unsupported problem line '" + raw + "'");
      Var n = 0;
      std::size_t m = 0;
      std::string t;
      if (!(ls >> n >> m)) throw ParseError(line, "malformed problem line");
      f.ensure_vars(n);
      if (ls >> t) top = Weight::parse(t);
      continue;
    }

    Weight w;
    try {
      w = Weight::parse(head);
    } catch (const Error&) {
      throw ParseError(line, "bad weight '" + head + "'");
    }
    if (w.is_zero()) throw ParseError(line, "zero weight");
    if (w.is_negative() && !opts.allow_negative)
      throw ParseError(line, "negative weight (use --allow-negative)");
    if (top && w.is_finite() && w >= *top) w = Weight::infinity();

    std::vector<std::int64_t> lits;
    std::string tok;
    bool closed = false;
    while (ls >> tok) {
      if (closed) throw ParseError(line, "trailing tokens after 0");
      auto v = parse_literal(tok, line);
      if (v == 0) {
        closed = true;
        continue;
      }
      lits.push_back(v);
    }
    if (!closed) throw ParseError(line, "clause not terminated by 0");
    try {
      f.add(Clause::from_dimacs(lits), w);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
  return f;
}

Formula parse_wcnf_string(const std::string& text, const WcnfOptions& opts) {
  std::istringstream in(text);
  return parse_wcnf(in, opts);
}

Formula read_wcnf_file(const std::string& path, const WcnfOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_wcnf(in, opts);
}

void write_wcnf(std::ostream& out, const Formula& f) {
  Var mentioned = 0;
  for (const auto& [c, w] : f.entries()) mentioned = std::max(mentioned, c.max_var());
  if (f.num_vars() > mentioned) out << "c vars " << f.num_vars() << "\n";
  for (const auto& [c, w] : f.entries()) {
    out << (w.is_infinite() ? std::string("h") : w.to_string());
    for (auto l : c.to_dimacs()) out << ' ' << l;
    out << " 0\n";
  }
}

std::string wcnf_string(const Formula& f) {
  std::ostringstream out;
  write_wcnf(out, f);
  return out.str();
}

void write_wcnf_file(const std::string& path, const Formula& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_wcnf(out, f);
}

}  // namespace maxres
