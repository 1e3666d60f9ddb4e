#include "maxres/error.hpp"
#include "maxres/kernels/cost_kernel.hpp"

namespace maxres::kernels {

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::automatic:
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(MAXRES_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(MAXRES_HAVE_NEON_KERNEL)
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

Isa resolve_isa(Isa isa) {
  if (isa == Isa::automatic) {
    if (isa_supported(Isa::avx2)) return Isa::avx2;
    if (isa_supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
  }
  if (!isa_supported(isa)) throw Error("kernel '" + std::string(isa_name(isa)) + "' not available on this machine");
  return isa;
}

BlockKernel kernel_for(Isa isa) {
  switch (resolve_isa(isa)) {
#if defined(MAXRES_HAVE_AVX2_KERNEL)
    case Isa::avx2:
      return &cost_block_avx2;
#endif
#if defined(MAXRES_HAVE_NEON_KERNEL)
    case Isa::neon:
      return &cost_block_neon;
#endif
    default:
      return &cost_block_scalar;
  }
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::automatic: return "auto";
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

Isa parse_isa(std::string_view name) {
  for (Isa i : {Isa::automatic, Isa::scalar, Isa::avx2, Isa::neon})
    if (isa_name(i) == name) return i;
  throw Error("unknown kernel '" + std::string(name) + "'");
}

}  // namespace maxres::kernels
