// Built with -mavx2; only reached through dispatch after a CPU check.
#include <immintrin.h>

#include "maxres/kernels/cost_kernel.hpp"

namespace maxres::kernels {

void cost_block_avx2(const PackedFormula& p, std::uint64_t first, std::size_t count,
                     std::int64_t* cost, std::uint8_t* hard) {
  const std::size_t nh = p.hard_pos.size();
  const std::size_t ns = p.soft_pos.size();
  const __m256i zero = _mm256_setzero_si256();
  const __m256i lane = _mm256_set_epi64x(3, 2, 1, 0);

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i k = _mm256_add_epi64(_mm256_set1_epi64x(std::int64_t(first + i)), lane);

    __m256i hit = zero;
    for (std::size_t c = 0; c < nh; ++c) {
      const __m256i pos = _mm256_set1_epi64x(std::int64_t(p.hard_pos[c]));
      const __m256i neg = _mm256_set1_epi64x(std::int64_t(p.hard_neg[c]));
      __m256i f = _mm256_and_si256(_mm256_cmpeq_epi64(_mm256_and_si256(k, pos), zero),
                                   _mm256_cmpeq_epi64(_mm256_and_si256(k, neg), neg));
      hit = _mm256_or_si256(hit, f);
      // every lane already hard: nothing left to learn
      if (_mm256_movemask_pd(_mm256_castsi256_pd(hit)) == 0xF) break;
    }

    __m256i acc = zero;
    for (std::size_t c = 0; c < ns; ++c) {
      const __m256i pos = _mm256_set1_epi64x(std::int64_t(p.soft_pos[c]));
      const __m256i neg = _mm256_set1_epi64x(std::int64_t(p.soft_neg[c]));
      const __m256i w = _mm256_set1_epi64x(p.soft_weight[c]);
      __m256i f = _mm256_and_si256(_mm256_cmpeq_epi64(_mm256_and_si256(k, pos), zero),
                                   _mm256_cmpeq_epi64(_mm256_and_si256(k, neg), neg));
      acc = _mm256_add_epi64(acc, _mm256_and_si256(f, w));
    }

    _mm256_storeu_si256(reinterpret_cast<__m256i*>(cost + i), acc);
    const int m = _mm256_movemask_pd(_mm256_castsi256_pd(hit));
    for (int j = 0; j < 4; ++j) hard[i + j] = (m >> j) & 1;
  }
  if (i < count) cost_block_scalar(p, first + i, count - i, cost + i, hard + i);
}

}  // namespace maxres::kernels
