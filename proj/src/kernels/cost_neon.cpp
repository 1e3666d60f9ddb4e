#include <arm_neon.h>

#include "maxres/kernels/cost_kernel.hpp"

namespace maxres::kernels {

// Two assignments per vector. vceqq_u64 needs AArch64.
void cost_block_neon(const PackedFormula& p, std::uint64_t first, std::size_t count,
                     std::int64_t* cost, std::uint8_t* hard) {
  const std::size_t nh = p.hard_pos.size();
  const std::size_t ns = p.soft_pos.size();
  const uint64x2_t zero = vdupq_n_u64(0);
  const std::uint64_t lanes[2] = {0, 1};
  const uint64x2_t lane = vld1q_u64(lanes);

  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const uint64x2_t k = vaddq_u64(vdupq_n_u64(first + i), lane);

    uint64x2_t hit = zero;
    for (std::size_t c = 0; c < nh; ++c) {
      const uint64x2_t pos = vdupq_n_u64(p.hard_pos[c]);
      const uint64x2_t neg = vdupq_n_u64(p.hard_neg[c]);
      hit = vorrq_u64(hit, vandq_u64(vceqq_u64(vandq_u64(k, pos), zero),
                                     vceqq_u64(vandq_u64(k, neg), neg)));
    }

    int64x2_t acc = vdupq_n_s64(0);
    for (std::size_t c = 0; c < ns; ++c) {
      const uint64x2_t pos = vdupq_n_u64(p.soft_pos[c]);
      const uint64x2_t neg = vdupq_n_u64(p.soft_neg[c]);
      uint64x2_t f = vandq_u64(vceqq_u64(vandq_u64(k, pos), zero), vceqq_u64(vandq_u64(k, neg), neg));
      acc = vaddq_s64(acc, vandq_s64(vreinterpretq_s64_u64(f), vdupq_n_s64(p.soft_weight[c])));
    }

    vst1q_s64(cost + i, acc);
    hard[i] = vgetq_lane_u64(hit, 0) != 0;
    hard[i + 1] = vgetq_lane_u64(hit, 1) != 0;
  }
  if (i < count) cost_block_scalar(p, first + i, count - i, cost + i, hard + i);
}

}  // namespace maxres::kernels
