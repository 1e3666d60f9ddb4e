#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "maxres/formula.hpp"

namespace maxres::kernels {

// Bit-packed formula for truth-table enumeration. Variable v maps to bit
// (num_vars - v), so a mask lines up with an enumeration index directly.
// A clause is falsified by index k iff (k & pos) == 0 and (k & neg) == neg.
struct PackedFormula {
  Var num_vars = 0;
  std::vector<std::uint64_t> soft_pos, soft_neg;
  std::vector<std::int64_t> soft_weight;
  std::vector<std::uint64_t> hard_pos, hard_neg;
};

// Upper bound on the summed magnitude of soft weights that the packed path
// accepts; keeps every partial sum inside int64.
inline constexpr std::int64_t kMaxPackedMass = std::int64_t(1) << 62;

// Packs over the universe max(num_vars, f.num_vars()). nullopt if that
// exceeds 63 variables or the soft weights do not fit the int64
// accumulator; callers then fall back to exact evaluation.
std::optional<PackedFormula> pack(const Formula& f, Var num_vars = 0);

// Evaluates assignments first .. first+count-1. cost[i] is the soft cost
// (always computed), hard[i] is 1 when some hard clause is falsified.
using BlockKernel = void (*)(const PackedFormula&, std::uint64_t first, std::size_t count,
                             std::int64_t* cost, std::uint8_t* hard);

void cost_block_scalar(const PackedFormula& p, std::uint64_t first, std::size_t count,
                       std::int64_t* cost, std::uint8_t* hard);
#if defined(MAXRES_HAVE_AVX2_KERNEL)
void cost_block_avx2(const PackedFormula& p, std::uint64_t first, std::size_t count,
                     std::int64_t* cost, std::uint8_t* hard);
#endif
#if defined(MAXRES_HAVE_NEON_KERNEL)
void cost_block_neon(const PackedFormula& p, std::uint64_t first, std::size_t count,
                     std::int64_t* cost, std::uint8_t* hard);
#endif

enum class Isa { automatic, scalar, avx2, neon };

// Compiled in and supported by the running CPU.
bool isa_supported(Isa isa);
// automatic -> best supported; anything unsupported throws Error.
Isa resolve_isa(Isa isa);
BlockKernel kernel_for(Isa isa);
std::string_view isa_name(Isa isa);
Isa parse_isa(std::string_view name);

}  // namespace maxres::kernels
