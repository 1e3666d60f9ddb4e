#include <gtest/gtest.h>

#include <random>

#include "maxres/error.hpp"
#include "maxres/generators.hpp"
#include "maxres/kernels/cost_kernel.hpp"
#include "test_util.hpp"

using namespace maxres;
using namespace maxres::testing;
namespace k = maxres::kernels;

namespace {

struct Block {
  std::vector<std::int64_t> cost;
  std::vector<std::uint8_t> hard;
};

Block run(k::BlockKernel fn, const k::PackedFormula& p, std::uint64_t first, std::size_t count) {
  Block b{std::vector<std::int64_t>(count, -1), std::vector<std::uint8_t>(count, 7)};
  fn(p, first, count, b.cost.data(), b.hard.data());
  return b;
}

// Exact evaluation through the Formula path.
Block exact(const Formula& f, Var n, std::uint64_t first, std::size_t count) {
  Formula soft(n), hard(n);
  for (const auto& [c, w] : f.entries()) (w.is_infinite() ? hard : soft).add(c, w);
  Block b;
  for (std::size_t i = 0; i < count; ++i) {
    auto x = Assignment::from_index(first + i, n);
    b.cost.push_back(cost(soft, x).value().convert_to<std::int64_t>());
    b.hard.push_back(cost(hard, x).is_infinite() ? 1 : 0);
  }
  return b;
}

std::vector<k::Isa> available() {
  std::vector<k::Isa> out;
  for (auto isa : {k::Isa::avx2, k::Isa::neon})
    if (k::isa_supported(isa)) out.push_back(isa);
  return out;
}

TEST(Kernel, ScalarMatchesExactEvaluation) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Formula f = random_formula(9, 14, 6, 0.25, seed);
    f.add(Clause(), 2);  // the empty clause is falsified everywhere
    auto p = k::pack(f);
    ASSERT_TRUE(p);
    auto n = p->num_vars;
    std::size_t total = std::size_t(1) << n;
    auto a = run(k::cost_block_scalar, *p, 0, total);
    auto b = exact(f, n, 0, total);
    ASSERT_EQ(a.cost, b.cost) << "seed " << seed;
    ASSERT_EQ(a.hard, b.hard) << "seed " << seed;
  }
}

TEST(Kernel, SimdVariantsMatchScalarBitForBit) {
  auto isas = available();
  if (isas.empty()) GTEST_SKIP() << "no SIMD kernel on this machine";
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Formula f = random_formula(1 + seed % 14, 3 + seed % 25, 1000, 0.2, seed);
    if (seed % 5 == 0) f.add(C({1}), -3);  // negative soft weights pass through the kernels too
    auto p = k::pack(f);
    ASSERT_TRUE(p);
    std::uint64_t space = std::uint64_t(1) << p->num_vars;
    // odd offsets and lengths exercise the lane tails
    std::uint64_t first = rng() % space;
    std::size_t count = std::size_t(std::min<std::uint64_t>(space - first, 1 + rng() % 37));
    auto ref = run(k::cost_block_scalar, *p, first, count);
    for (auto isa : isas) {
      auto got = run(k::kernel_for(isa), *p, first, count);
      EXPECT_EQ(got.cost, ref.cost) << k::isa_name(isa) << " seed " << seed;
      EXPECT_EQ(got.hard, ref.hard) << k::isa_name(isa) << " seed " << seed;
    }
  }
}

TEST(Kernel, SimdHandlesWideUniverses) {
  auto isas = available();
  if (isas.empty()) GTEST_SKIP() << "no SIMD kernel on this machine";
  Formula f = F({{{1, -63}, 5}, {{-40, 2}, kInf}, {{63}, 1}, {{-1, -2, 30}, 9}}, 63);
  auto p = k::pack(f);
  ASSERT_TRUE(p);
  for (std::uint64_t first : {std::uint64_t(0), (std::uint64_t(1) << 62) + 3, (std::uint64_t(1) << 63) - 9}) {
    auto ref = run(k::cost_block_scalar, *p, first, 9);
    for (auto isa : isas) EXPECT_EQ(run(k::kernel_for(isa), *p, first, 9).cost, ref.cost);
  }
}

TEST(Kernel, PackRefusesWhatItCannotHold) {
  EXPECT_FALSE(k::pack(F({{{64}, 1}})));
  Formula heavy = F({{{1}, Weight(k::kMaxPackedMass)}, {{2}, 1}});
  EXPECT_FALSE(k::pack(heavy));
  EXPECT_TRUE(k::pack(F({{{1}, kInf}}, 63)));
}

TEST(Kernel, IsaNamesAndDispatch) {
  EXPECT_EQ(k::parse_isa("avx2"), k::Isa::avx2);
  EXPECT_EQ(k::isa_name(k::Isa::neon), "neon");
  EXPECT_THROW(k::parse_isa("sse9"), Error);
  EXPECT_TRUE(k::isa_supported(k::Isa::scalar));
  EXPECT_NE(k::resolve_isa(k::Isa::automatic), k::Isa::automatic);
  EXPECT_TRUE(k::isa_supported(k::resolve_isa(k::Isa::automatic)));
}

}  // namespace
