#include "maxres/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "maxres/circular_io.hpp"
#include "maxres/error.hpp"
#include "maxres/generators.hpp"
#include "maxres/oracle.hpp"
#include "maxres/proof_io.hpp"
#include "maxres/refutations.hpp"
#include "maxres/wcnf.hpp"

namespace maxres {

namespace {

using nlohmann::json;

struct Globals {
  unsigned oracle_bound = 24;
  bool allow_negative = false;
  bool json = false;
  std::uint64_t seed = 1;
  std::string kernel = "auto";

  OracleConfig oracle() const { return {Var(oracle_bound), kernels::parse_isa(kernel)}; }
  WcnfOptions wcnf() const { return {allow_negative}; }
};

json weight_json(const Weight& w) {
  if (w.is_infinite()) return "inf";
  if (w.value() >= std::numeric_limits<std::int64_t>::min() && w.value() <= std::numeric_limits<std::int64_t>::max())
    return w.value().convert_to<std::int64_t>();
  return w.to_string();
}

json clause_json(const Clause& c) { return c.to_dimacs(); }

std::string target_text(const WeightedClause& wc) { return "(" + wc.clause.to_string() + "," + wc.weight.to_string() + ")"; }

class Session {
 public:
  Session(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  // Emits either the human text or the JSON object, then returns the code.
  int finish(int code, const std::string& text, json j) {
    if (g_.json) {
      j["schema"] = kJsonSchema;
      j["exit"] = code;
      out_ << j.dump() << "\n";
    } else if (!text.empty()) {
      out_ << text;
      if (text.back() != '\n') out_ << "\n";
    }
    return code;
  }

  const Globals& g() const { return g_; }
  std::ostream& out() { return out_; }

 private:
  const Globals& g_;
  std::ostream& out_;
};

void write_or_print(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << body;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << body;
}

int cmd_gen(Session& s, const std::string& what, unsigned m, const std::string& out_path, Var vars,
            std::size_t clauses, std::uint64_t max_weight, double hard_fraction) {
  Formula f;
  std::string label;
  if (what == "random") {
    f = random_formula(vars, clauses, max_weight, hard_fraction, s.g().seed);
    label = "random";
  } else {
    auto v = parse_variant(what);
    f = gen_pigeonhole(v, m).formula;
    label = std::string(variant_name(v)) + "-" + std::to_string(m);
  }
  std::string body = wcnf_string(f);
  bool to_stdout = out_path.empty() || out_path == "-";
  if (to_stdout && !s.g().json) {
    s.out() << body;
    return kExitOk;
  }
  write_or_print(to_stdout ? "" : out_path, to_stdout ? "" : body, s.out());
  json j{{"command", "gen"}, {"instance", label}, {"clauses", f.size()}, {"vars", f.num_vars()}};
  if (!to_stdout) j["output"] = out_path;
  else j["wcnf"] = body;
  return s.finish(kExitOk,
                  "wrote " + out_path + " (" + std::to_string(f.size()) + " clauses, " +
                      std::to_string(f.num_vars()) + " vars)",
                  j);
}

int cmd_oracle(Session& s, const std::string& path) {
  Formula f = read_wcnf_file(path, s.g().wcnf());
  auto r = maxsat_bruteforce(f, s.g().oracle());
  std::string text = "optimum: " + r.optimum.to_string() + "\nwitness: " + r.witness.to_string() + "\n";
  json j{{"command", "oracle"},
         {"optimum", weight_json(r.optimum)},
         {"witness", r.witness.to_string()},
         {"assignments_checked", r.assignments_checked}};
  return s.finish(kExitOk, text, j);
}

int report_proof(Session& s, const Proof& p, const std::string& command) {
  auto v = check_proof(p);
  json j{{"command", command},
         {"valid", v.valid},
         {"length", v.length},
         {"merges", v.merges},
         {"target", {{"clause", clause_json(p.target.clause)}, {"weight", weight_json(p.target.weight)}}},
         {"derived_weight", weight_json(v.derived_weight)}};
  std::string text;
  if (v.valid) {
    text = "valid, target " + target_text(p.target) + "\nlength: " + std::to_string(v.length) +
           "\nmerges: " + std::to_string(v.merges) + "\n";
  } else if (v.failed_step) {
    text = "invalid at step " + std::to_string(*v.failed_step + 1) + ": " + v.reason + "\n";
    j["failed_step"] = *v.failed_step + 1;
    j["reason"] = v.reason;
  } else {
    text = "invalid: " + v.reason + "\n";
    j["reason"] = v.reason;
  }
  return s.finish(v.valid ? kExitOk : kExitNegative, text, j);
}

int cmd_check(Session& s, const std::string& wcnf, const std::string& proof) {
  Formula f = read_wcnf_file(wcnf, s.g().wcnf());
  ProofTrace t = read_proof_file(proof);
  return report_proof(s, make_proof(f, t), "check");
}

int cmd_circular_check(Session& s, const std::string& path) {
  CircularFile cf = read_circular_file(path);
  const auto& g = cf.proof.graph;
  auto v = check_circular(g, cf.proof.flow);
  json j{{"command", "circular-check"}, {"valid", v.valid}, {"conclusion", clause_json(g.nodes[g.conclusion].clause)}};
  std::string text;
  if (v.valid) {
    std::string b = rational_string(v.balances[g.conclusion]);
    j["conclusion_balance"] = b;
    text = "valid, conclusion (" + g.nodes[g.conclusion].clause.to_string() + ") balance " + b + "\n";
  } else {
    std::string where;
    if (v.node) where = " (node " + cf.node_ids[*v.node] + ")";
    else if (v.inference && *v.inference < cf.inference_ids.size())
      where = " (inference " + cf.inference_ids[*v.inference] + ")";
    j["reason"] = v.reason;
    if (v.node) j["node"] = cf.node_ids[*v.node];
    if (v.inference && *v.inference < cf.inference_ids.size()) j["inference"] = cf.inference_ids[*v.inference];
    text = "invalid: " + v.reason + where + "\n";
  }
  return s.finish(v.valid ? kExitOk : kExitNegative, text, j);
}

int cmd_refute(Session& s, const std::string& what, unsigned m, const std::string& out_path,
               const std::string& instance) {
  if (m == 0) throw Error("pigeonhole needs m >= 1");
  auto v = parse_variant(what);
  Proof p;
  switch (v) {
    case PigeonVariant::sphp1: p = build_sphp1_refutation(m); break;
    case PigeonVariant::sphp0: p = build_sphp0_refutation(m); break;
    case PigeonVariant::sphp: p = build_sphp_refutation(m); break;
    case PigeonVariant::php: p = build_php_lb1_refutation(m); break;
  }
  if (!instance.empty()) {
    write_wcnf_file(instance, p.initial);
    p.source = instance;
  }
  bool to_stdout = out_path.empty() || out_path == "-";
  if (to_stdout && !s.g().json) {
    write_proof(s.out(), p);
    return kExitOk;
  }
  if (!to_stdout) write_proof_file(out_path, p);
  json j{{"command", "refute"},
         {"variant", variant_name(v)},
         {"m", m},
         {"steps", p.steps.size()},
         {"target", {{"clause", clause_json(p.target.clause)}, {"weight", weight_json(p.target.weight)}}}};
  if (!to_stdout) j["output"] = out_path;
  else j["proof"] = proof_string(p);
  return s.finish(kExitOk,
                  "wrote " + out_path + " (" + std::to_string(p.steps.size()) + " steps, target " +
                      target_text(p.target) + ")",
                  j);
}

std::string swap_extension(const std::string& path, const std::string& ext) {
  auto slash = path.find_last_of('/');
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ext;
  return path.substr(0, dot) + ext;
}

int cmd_translate(Session& s, bool to_ressv, bool to_circular, const std::vector<std::string>& inputs,
                  const std::string& out_path, std::string instance) {
  if (to_ressv == to_circular) throw CLI::ValidationError("translate", "choose exactly one of --to-ressv or --to-circular");
  bool to_stdout = out_path.empty() || out_path == "-";
  if (to_ressv) {
    if (inputs.size() != 1) throw CLI::ValidationError("translate", "--to-ressv takes one circular proof file");
    CircularFile cf = read_circular_file(inputs[0]);
    Proof p = circular_to_ressv(cf.proof.graph, cf.proof.flow);
    if (instance.empty() && !to_stdout) instance = swap_extension(out_path, ".wcnf");
    if (!instance.empty()) {
      write_wcnf_file(instance, p.initial);
      p.source = instance;
    }
    if (to_stdout && !s.g().json) {
      write_proof(s.out(), p);
      return kExitOk;
    }
    if (!to_stdout) write_proof_file(out_path, p);
    auto v = check_proof(p);
    json j{{"command", "translate"}, {"direction", "to-ressv"}, {"steps", p.steps.size()}, {"valid", v.valid}};
    if (!instance.empty()) j["instance"] = instance;
    if (!to_stdout) j["output"] = out_path;
    return s.finish(kExitOk,
                    "wrote " + out_path + " (" + std::to_string(p.steps.size()) + " steps, " +
                        (v.valid ? "valid" : "INVALID") + ") and " + instance,
                    j);
  }
  if (inputs.size() != 2) throw CLI::ValidationError("translate", "--to-circular takes an instance and a proof file");
  Formula f = read_wcnf_file(inputs[0], s.g().wcnf());
  Proof p = make_proof(f, read_proof_file(inputs[1]));
  CircularProof c = ressv_to_circular(p);
  if (to_stdout && !s.g().json) {
    write_circular(s.out(), c);
    return kExitOk;
  }
  if (!to_stdout) write_circular_file(out_path, c);
  json j{{"command", "translate"},
         {"direction", "to-circular"},
         {"nodes", c.graph.nodes.size()},
         {"inferences", c.graph.inferences.size()}};
  if (!to_stdout) j["output"] = out_path;
  return s.finish(kExitOk,
                  "wrote " + out_path + " (" + std::to_string(c.graph.nodes.size()) + " nodes, " +
                      std::to_string(c.graph.inferences.size()) + " inferences)",
                  j);
}

int cmd_dualrail(Session& s, const std::string& in, const std::string& out_path) {
  Formula f = read_wcnf_file(in, s.g().wcnf());
  Formula d = dual_rail_encode(f);
  bool to_stdout = out_path.empty() || out_path == "-";
  if (to_stdout && !s.g().json) {
    write_wcnf(s.out(), d);
    return kExitOk;
  }
  if (!to_stdout) write_wcnf_file(out_path, d);
  json j{{"command", "dualrail"}, {"clauses", d.size()}, {"vars", d.num_vars()}};
  if (!to_stdout) j["output"] = out_path;
  else j["wcnf"] = wcnf_string(d);
  return s.finish(kExitOk, "wrote " + out_path + " (" + std::to_string(d.size()) + " clauses)", j);
}

std::vector<std::int64_t> parse_literal_list(const std::string& text) {
  std::string t = text;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream in(t);
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v == 0) throw CLI::ValidationError("--units", "bad literal '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--units", "no literals given");
  return out;
}

struct ProbeRoute {
  std::optional<Proof> d1, d2;
  std::string failure;
};

// d1/d2 from greedy unit propagation.
ProbeRoute greedy_route(const Formula& f, const Formula& u) {
  ProbeRoute r;
  const Weight k = roof(u);
  Formula start = f;
  start.add(u);
  auto first = unit_saturate(start, {k, 100000});
  if (first.derived.weight < k) {
    r.failure = "unit propagation from F and U reached (□," + first.derived.weight.to_string() + "), needs " +
                k.to_string();
    return r;
  }
  first.proof.target = {Clause{}, k};
  Formula rest = replay(first.proof);
  rest.add(Clause{}, -k);
  for (const auto& [c, w] : u.entries()) rest.add(Clause{~c[0]}, w);
  auto second = unit_saturate(rest);
  if (!second.derived.weight.is_positive()) {
    r.failure = "no refutation after complementing the units";
    return r;
  }
  r.d1 = std::move(first.proof);
  r.d2 = std::move(second.proof);
  return r;
}

// The hole-chain construction, when f is a generated php or sphp instance
// and u holds the first pigeon's literals at weight 1.
std::optional<ProbeInputs> pigeon_route(const Formula& f, const Formula& u) {
  for (unsigned m = 1; (m + 1) * m <= f.num_vars(); ++m) {
    if ((m + 1) * m != f.num_vars()) continue;
    for (auto v : {PigeonVariant::php, PigeonVariant::sphp}) {
      auto inst = gen_pigeonhole(v, m);
      if (!(inst.formula.entries() == f.entries())) continue;
      auto in = pigeon_probe_inputs(inst);
      if (in.units.entries() == u.entries()) return in;
    }
  }
  return std::nullopt;
}

int cmd_probe(Session& s, const std::string& in, const std::string& units, const std::string& out_path) {
  Formula f = read_wcnf_file(in, s.g().wcnf());
  Formula u(f.num_vars());
  for (auto l : parse_literal_list(units)) u.add(Clause{Literal::from_dimacs(l)}, Weight(1));
  json j{{"command", "probe"}, {"units", units}};

  auto fail = [&](const std::string& why) {
    j["valid"] = false;
    j["reason"] = why;
    return s.finish(kExitNegative, "probe failed: " + why + "\n", j);
  };

  for (const auto& [c, w] : u.entries())
    if (u.contains(Clause{~c[0]})) return fail("probing set has a complementary pair");

  std::string route = "unit propagation";
  ProbeRoute r = greedy_route(f, u);
  if (!r.d1) {
    auto built = pigeon_route(f, u);
    if (!built) return fail(r.failure);
    route = "pigeon construction";
    r.d1 = std::move(built->d1);
    r.d2 = std::move(built->d2);
  }

  Proof p = soft_probe(f, u, *r.d1, *r.d2);
  if (!out_path.empty()) write_proof_file(out_path, p);
  auto v = check_proof(p);
  j["valid"] = v.valid;
  j["route"] = route;
  j["target"] = {{"clause", clause_json(p.target.clause)}, {"weight", weight_json(p.target.weight)}};
  j["steps"] = p.steps.size();
  if (!out_path.empty()) j["output"] = out_path;
  std::string text = (v.valid ? "valid, target " : "invalid probe proof, target ") + target_text(p.target) +
                     "\nsteps: " + std::to_string(p.steps.size()) + "\nroute: " + route + "\n";
  return s.finish(v.valid ? kExitOk : kExitNegative, text, j);
}

int cmd_entails(Session& s, const std::string& fpath, const std::string& gpath, bool verify) {
  Formula f = read_wcnf_file(fpath, s.g().wcnf());
  Formula g = read_wcnf_file(gpath, s.g().wcnf());
  auto cfg = s.g().oracle();
  auto r = entails_reduced_detail(f, g, cfg);
  std::string cmp = r.optimum.to_string() + (r.entailed ? " >= " : " < ") + r.roof.to_string();
  std::string text = (r.entailed ? "entailed (" : "not entailed (") + cmp + ")\n";
  json j{{"command", "entails"},
         {"entailed", r.entailed},
         {"optimum", weight_json(r.optimum)},
         {"roof", weight_json(r.roof)},
         {"gamma", weight_json(r.gamma)}};
  if (verify) {
    bool direct = entails_direct(f, g, cfg);
    j["direct"] = direct;
    if (direct != r.entailed) {
      j["reason"] = "reduction and direct check disagree";
      return s.finish(kExitUsage, "error: reduction and direct check disagree\n", j);
    }
    text += "direct check agrees\n";
  }
  return s.finish(r.entailed ? kExitOk : kExitNegative, text, j);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolution-based MaxSAT proof toolkit", "maxres"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--oracle-bound", g.oracle_bound, "Largest universe the brute-force oracle enumerates")
      ->check(CLI::Range(0u, 63u));
  app.add_flag("--allow-negative", g.allow_negative, "Accept negative weights in WCNF input");
  app.add_flag("--json", g.json, "Print one JSON object per command");
  app.add_option("--seed", g.seed, "Seed for random instances");
  app.add_option("--kernel", g.kernel, "Oracle kernel")->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  std::string what, out_path, instance, units, path_a, path_b;
  unsigned m = 0;
  Var vars = 6;
  std::size_t clauses = 10;
  std::uint64_t max_weight = 5;
  double hard_fraction = 0.0;
  bool verify = false, to_ressv = false, to_circular = false;
  std::vector<std::string> inputs;

  auto* gen = app.add_subcommand("gen", "Write a pigeonhole or random instance");
  gen->add_option("family", what, "php | sphp | sphp0 | sphp1 | random")->required();
  gen->add_option("-m", m, "Number of holes");
  gen->add_option("-o,--output", out_path, "Output WCNF (stdout if absent)");
  gen->add_option("--vars", vars, "random: number of variables");
  gen->add_option("--clauses", clauses, "random: number of clauses");
  gen->add_option("--max-weight", max_weight, "random: largest soft weight");
  gen->add_option("--hard-fraction", hard_fraction, "random: probability of a hard clause")->check(CLI::Range(0.0, 1.0));

  auto* oracle = app.add_subcommand("oracle", "Exact MaxSAT optimum by enumeration");
  oracle->add_option("wcnf", path_a)->required();

  auto* check = app.add_subcommand("check", "Replay and validate a proof trace");
  check->add_option("wcnf", path_a)->required();
  check->add_option("proof", path_b)->required();

  auto* ccheck = app.add_subcommand("circular-check", "Validate a circular proof and its flow");
  ccheck->add_option("cir", path_a)->required();

  auto* refute = app.add_subcommand("refute", "Emit a pigeonhole refutation");
  refute->add_option("family", what, "sphp1 | sphp0 | sphp | php")->required();
  refute->add_option("-m", m, "Number of holes")->required();
  refute->add_option("-o,--output", out_path, "Output proof (stdout if absent)");
  refute->add_option("--instance", instance, "Also write the instance and name it in the header");

  auto* translate = app.add_subcommand("translate", "Convert between circular and ResSV proofs");
  translate->add_flag("--to-ressv", to_ressv, "circular proof -> ResSV proof");
  translate->add_flag("--to-circular", to_circular, "instance + ResSV proof -> circular proof");
  translate->add_option("inputs", inputs)->required();
  translate->add_option("-o,--output", out_path, "Output file (stdout if absent)");
  translate->add_option("--instance", instance, "--to-ressv: where to write the instance");

  auto* dualrail = app.add_subcommand("dualrail", "Dual rail encoding of a hard instance");
  dualrail->add_option("wcnf", path_a)->required();
  dualrail->add_option("-o,--output", out_path, "Output WCNF (stdout if absent)");

  auto* probe = app.add_subcommand("probe", "Soft probing with unit propagation");
  probe->add_option("wcnf", path_a)->required();
  probe->add_option("--units", units, "Probing literals, e.g. 1,2")->required();
  probe->add_option("-o,--output", out_path, "Write the assembled proof");

  auto* entails = app.add_subcommand("entails", "Decide F |= G through a single optimisation");
  entails->add_option("f", path_a)->required();
  entails->add_option("g", path_b)->required();
  entails->add_flag("--verify", verify, "Cross-check with the direct definition");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Session s(g, out);
  try {
    if (*gen) {
      if (what != "random" && m == 0) throw CLI::ValidationError("-m", "required and at least 1");
      return cmd_gen(s, what, m, out_path, vars, clauses, max_weight, hard_fraction);
    }
    if (*oracle) return cmd_oracle(s, path_a);
    if (*check) return cmd_check(s, path_a, path_b);
    if (*ccheck) return cmd_circular_check(s, path_a);
    if (*refute) return cmd_refute(s, what, m, out_path, instance);
    if (*translate) return cmd_translate(s, to_ressv, to_circular, inputs, out_path, instance);
    if (*dualrail) return cmd_dualrail(s, path_a, out_path);
    if (*probe) return cmd_probe(s, path_a, units, out_path);
    if (*entails) return cmd_entails(s, path_a, path_b, verify);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (g.json) {
      out << json{{"schema", kJsonSchema}, {"exit", kExitUsage}, {"error", e.what()}}.dump() << "\n";
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace maxres
