#include "maxres/kernels/cost_kernel.hpp"

namespace maxres::kernels {

// Reference kernel. The SIMD variants must agree with it bit for bit.
void cost_block_scalar(const PackedFormula& p, std::uint64_t first, std::size_t count,
                       std::int64_t* cost, std::uint8_t* hard) {
  const std::size_t nh = p.hard_pos.size();
  const std::size_t ns = p.soft_pos.size();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t k = first + i;
    std::uint8_t h = 0;
    for (std::size_t c = 0; c < nh && !h; ++c)
      h = ((k & p.hard_pos[c]) == 0) & ((k & p.hard_neg[c]) == p.hard_neg[c]);
    hard[i] = h;
    std::int64_t s = 0;
    for (std::size_t c = 0; c < ns; ++c)
      if ((k & p.soft_pos[c]) == 0 && (k & p.soft_neg[c]) == p.soft_neg[c]) s += p.soft_weight[c];
    cost[i] = s;
  }
}

}  // namespace maxres::kernels
