#include "maxres/oracle.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "maxres/error.hpp"

namespace maxres {

namespace {

constexpr std::size_t kBlock = 4096;

Var checked_universe(Var n, const OracleConfig& cfg) {
  if (n > cfg.bound || n > 63) throw Error("oracle bound exceeded");
  return n;
}

// Cost table of one formula over a fixed universe, filled block by block.
// Uses the packed kernel when weights fit, exact arithmetic otherwise.
class CostTable {
 public:
  CostTable(const Formula& f, Var n, const OracleConfig& cfg) : f_(f), n_(n) {
    packed_ = kernels::pack(f, n);
    if (packed_) {
      kernel_ = kernels::kernel_for(cfg.isa);
      small_.resize(kBlock);
      hard_.resize(kBlock);
    } else {
      exact_.resize(kBlock);
    }
  }

  void fill(std::uint64_t first, std::size_t count) {
    if (packed_) {
      kernel_(*packed_, first, count, small_.data(), hard_.data());
      return;
    }
    for (std::size_t i = 0; i < count; ++i) exact_[i] = cost(f_, Assignment::from_index(first + i, n_));
  }

  bool fast() const { return packed_.has_value(); }
  bool hard(std::size_t i) const { return packed_ ? hard_[i] != 0 : exact_[i].is_infinite(); }
  std::int64_t small(std::size_t i) const { return small_[i]; }
  Weight at(std::size_t i) const {
    if (!packed_) return exact_[i];
    return hard_[i] ? Weight::infinity() : Weight(small_[i]);
  }

 private:
  const Formula& f_;
  Var n_;
  std::optional<kernels::PackedFormula> packed_;
  kernels::BlockKernel kernel_ = nullptr;
  std::vector<std::int64_t> small_;
  std::vector<std::uint8_t> hard_;
  std::vector<Weight> exact_;
};

template <class Fn>
void for_each_block(Var n, Fn fn) {
  const std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t first = 0; first < total; first += kBlock) {
    std::size_t count = std::size_t(std::min<std::uint64_t>(kBlock, total - first));
    fn(first, count);
  }
}

}  // namespace

OracleResult maxsat_bruteforce(const Formula& f, const OracleConfig& cfg) {
  const Var n = checked_universe(f.num_vars(), cfg);
  CostTable t(f, n, cfg);
  std::optional<std::uint64_t> best_k;
  std::int64_t best_small = 0;
  Weight best_exact;

  for_each_block(n, [&](std::uint64_t first, std::size_t count) {
    t.fill(first, count);
    for (std::size_t i = 0; i < count; ++i) {
      if (t.hard(i)) continue;
      if (t.fast()) {
        if (!best_k || t.small(i) < best_small) {
          best_k = first + i;
          best_small = t.small(i);
        }
      } else {
        Weight w = t.at(i);
        if (!best_k || w < best_exact) {
          best_k = first + i;
          best_exact = std::move(w);
        }
      }
    }
  });

  OracleResult r;
  r.assignments_checked = std::uint64_t(1) << n;
  if (!best_k) {
    r.optimum = Weight::infinity();
    r.witness = Assignment::from_index(0, n);
  } else {
    r.optimum = t.fast() ? Weight(best_small) : best_exact;
    r.witness = Assignment::from_index(*best_k, n);
  }
  return r;
}

bool entails_direct(const Formula& f, const Formula& g, const OracleConfig& cfg) {
  const Var n = checked_universe(std::max(f.num_vars(), g.num_vars()), cfg);
  CostTable tf(f, n, cfg), tg(g, n, cfg);
  bool ok = true;
  for_each_block(n, [&](std::uint64_t first, std::size_t count) {
    if (!ok) return;
    tf.fill(first, count);
    tg.fill(first, count);
    for (std::size_t i = 0; i < count && ok; ++i) {
      if (tf.hard(i)) continue;
      if (tg.hard(i)) {
        ok = false;
      } else if (tf.fast() && tg.fast()) {
        ok = tf.small(i) >= tg.small(i);
      } else {
        ok = tf.at(i) >= tg.at(i);
      }
    }
  });
  return ok;
}

Weight gamma_of(const Formula& f, const OracleConfig& cfg) {
  const Var n = checked_universe(f.num_vars(), cfg);
  CostTable t(f, n, cfg);
  std::optional<Weight> top;
  for_each_block(n, [&](std::uint64_t first, std::size_t count) {
    t.fill(first, count);
    std::optional<std::int64_t> block_max;
    for (std::size_t i = 0; i < count; ++i) {
      if (t.hard(i)) continue;
      if (t.fast()) {
        if (!block_max || t.small(i) > *block_max) block_max = t.small(i);
      } else if (Weight w = t.at(i); !top || w > *top) {
        top = w;
      }
    }
    if (block_max && (!top || Weight(*block_max) > *top)) top = Weight(*block_max);
  });
  if (!top) return Weight(1);
  Weight g = *top + Weight(1);
  return g < Weight(1) ? Weight(1) : g;
}

Formula cap_hard(const Formula& g, const Weight& cap) {
  Formula out(g.num_vars());
  for (const auto& [c, w] : g.entries()) out.add(c, w.is_infinite() ? cap : w);
  return out;
}

ReducedEntailment entails_reduced_detail(const Formula& f, const Formula& g, const OracleConfig& cfg) {
  checked_universe(std::max(f.num_vars(), g.num_vars()), cfg);
  ReducedEntailment r;
  r.gamma = gamma_of(f, cfg);
  Formula capped = cap_hard(g, r.gamma);
  r.roof = roof(capped);

  Formula joint = f;
  joint.ensure_vars(g.num_vars());
  for (const auto& [c, w] : capped.entries()) {
    if (c.empty()) continue;  // ¬□ holds everywhere: no clauses, zero cost
    joint.add(negate_clause({c, w}));
  }
  r.optimum = maxsat_bruteforce(joint, cfg).optimum;
  r.entailed = r.optimum >= r.roof;
  return r;
}

bool equivalent(const Formula& f, const Formula& g, const OracleConfig& cfg) {
  return entails_direct(f, g, cfg) && entails_direct(g, f, cfg);
}

}  // namespace maxres
