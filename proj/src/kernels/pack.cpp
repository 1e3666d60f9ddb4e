#include "maxres/kernels/cost_kernel.hpp"

#include <algorithm>

namespace maxres::kernels {

std::optional<PackedFormula> pack(const Formula& f, Var num_vars) {
  const Var n = std::max(num_vars, f.num_vars());
  if (n > 63) return std::nullopt;
  PackedFormula p;
  p.num_vars = n;
  BigInt mass = 0;
  for (const auto& [c, w] : f.entries()) {
    std::uint64_t pos = 0, neg = 0;
    for (const auto& l : c.literals()) {
      std::uint64_t bit = std::uint64_t(1) << (n - l.var());
      (l.is_negative() ? neg : pos) |= bit;
    }
    if (w.is_infinite()) {
      p.hard_pos.push_back(pos);
      p.hard_neg.push_back(neg);
      continue;
    }
    mass += abs(w.value());
    if (mass > kMaxPackedMass) return std::nullopt;
    p.soft_pos.push_back(pos);
    p.soft_neg.push_back(neg);
    p.soft_weight.push_back(w.value().convert_to<std::int64_t>());
  }
  return p;
}

}  // namespace maxres::kernels
