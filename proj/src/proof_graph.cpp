#include <algorithm>
#include <map>

#include "maxres/proof.hpp"

namespace maxres {

namespace {

InferenceKind kind_of(const RuleApplication& a) {
  if (std::holds_alternative<Resolution>(a)) return InferenceKind::resolution;
  if (std::holds_alternative<Split>(a)) return InferenceKind::split;
  return InferenceKind::virtual_rule;
}

class GraphBuilder {
 public:
  explicit GraphBuilder(const Formula& initial) {
    for (const auto& [c, w] : initial.entries()) live(c, w).push_back(add_clause(c, w, std::nullopt));
  }

  void step(std::size_t i, const RuleApplication& a, const RuleEffect& e) {
    GraphInference inf{kind_of(a), i, {}, {}};
    for (const auto& wc : e.consumed) {
      std::size_t node = join_positive(wc.clause, i);
      pos_[wc.clause].clear();
      inf.antecedents.push_back(node);
      const Weight& v = g_.clauses[node].weight;
      if (v.is_finite() && v > wc.weight) {
        std::size_t rest = add_clause(wc.clause, v - wc.weight, i);
        inf.consequents.push_back(rest);
        pos_[wc.clause].push_back(rest);
      }
    }
    for (const auto& wc : e.produced) {
      std::size_t node = add_clause(wc.clause, wc.weight, i);
      inf.consequents.push_back(node);
      live(wc.clause, wc.weight).push_back(node);
    }
    step_kind_.push_back(inf.kind);
    g_.inferences.push_back(std::move(inf));
  }

  ProofGraph finish() {
    std::map<Clause, std::vector<std::size_t>> all = pos_;
    for (auto& [c, ids] : neg_) all[c].insert(all[c].end(), ids.begin(), ids.end());
    for (auto& [c, ids] : all) {
      if (ids.size() < 2 || untouched_virtual_pair(ids)) continue;
      merge(c, ids, std::nullopt);
    }
    return std::move(g_);
  }

 private:
  std::vector<std::size_t>& live(const Clause& c, const Weight& w) { return w.is_negative() ? neg_[c] : pos_[c]; }

  std::size_t add_clause(const Clause& c, const Weight& w, std::optional<std::size_t> step) {
    g_.clauses.push_back({c, w, step});
    return g_.clauses.size() - 1;
  }

  // Both halves of one virtual step, never used since: nothing to merge.
  bool untouched_virtual_pair(const std::vector<std::size_t>& ids) const {
    if (ids.size() != 2) return false;
    const auto& a = g_.clauses[ids[0]];
    const auto& b = g_.clauses[ids[1]];
    if (!a.created_at || a.created_at != b.created_at || !(a.weight + b.weight).is_zero()) return false;
    return step_kind_[*a.created_at] == InferenceKind::virtual_rule;
  }

  std::optional<std::size_t> merge(const Clause& c, const std::vector<std::size_t>& ids, std::optional<std::size_t> step) {
    Weight sum = 0;
    for (auto id : ids) sum += g_.clauses[id].weight;
    GraphInference m{InferenceKind::merge, step, ids, {}};
    std::optional<std::size_t> out;
    if (!sum.is_zero()) {
      out = add_clause(c, sum, step);
      m.consequents.push_back(*out);
    }
    g_.inferences.push_back(std::move(m));
    return out;
  }

  // Single live positive node for c, merging first when there are several.
  std::size_t join_positive(const Clause& c, std::size_t step) {
    auto& ids = pos_[c];
    if (ids.empty()) throw Error("graph: antecedent without a live node");
    if (ids.size() == 1) return ids.front();
    auto joined = merge(c, ids, step);
    ids = {*joined};
    return *joined;
  }

  ProofGraph g_;
  std::vector<InferenceKind> step_kind_;
  std::map<Clause, std::vector<std::size_t>> pos_, neg_;
};

}  // namespace

ProofGraph build_graph(const Proof& p) {
  ProofState s(p.initial);
  GraphBuilder b(p.initial);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const auto& a = p.steps[i];
    const auto ants = antecedents(a);
    bool hard[2] = {false, false};
    for (std::size_t k = 0; k < ants.size(); ++k) hard[k] = s.available(ants[k]).is_infinite();
    try {
      s.apply(a);
    } catch (const StepError& e) {
      throw Error("invalid proof at step " + std::to_string(i + 1) + ": " + e.what());
    }
    b.step(i, a, apply_rule(a, hard[0], hard[1]));
  }
  return b.finish();
}

std::size_t ProofGraph::count(InferenceKind kind) const {
  return std::count_if(inferences.begin(), inferences.end(), [&](const auto& n) { return n.kind == kind; });
}

std::size_t ProofGraph::max_clause_out_degree() const {
  std::vector<std::size_t> deg(clauses.size(), 0);
  for (const auto& n : inferences)
    for (auto a : n.antecedents) ++deg[a];
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool ProofGraph::acyclic() const {
  // Kahn over the bipartite graph: clause ids 0..C-1, inference ids C..C+I-1.
  const std::size_t nc = clauses.size(), total = nc + inferences.size();
  std::vector<std::vector<std::size_t>> out(total);
  std::vector<std::size_t> indeg(total, 0);
  for (std::size_t j = 0; j < inferences.size(); ++j) {
    for (auto a : inferences[j].antecedents) {
      out[a].push_back(nc + j);
      ++indeg[nc + j];
    }
    for (auto c : inferences[j].consequents) {
      out[nc + j].push_back(c);
      ++indeg[c];
    }
  }
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < total; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    ++seen;
    for (auto w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return seen == total;
}

}  // namespace maxres
