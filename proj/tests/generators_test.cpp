#include <gtest/gtest.h>

#include "maxres/error.hpp"
#include "maxres/generators.hpp"
#include "maxres/oracle.hpp"
#include "test_util.hpp"

using namespace maxres;
using namespace maxres::testing;

namespace {

TEST(Pigeonhole, ClauseCounts) {
  for (unsigned m = 1; m <= 6; ++m) {
    auto php = gen_pigeonhole(PigeonVariant::php, m);
    EXPECT_EQ(php.formula.size(), (m + 1) + m * m * (m + 1) / 2);
    EXPECT_EQ(php.formula.num_vars(), m * (m + 1));
    EXPECT_TRUE(php.formula.is_hard());
    auto s0 = gen_pigeonhole(PigeonVariant::sphp0, m);
    EXPECT_EQ(s0.formula.weight(Clause()), Weight(std::int64_t(m * m + m)));
    auto s1 = gen_pigeonhole(PigeonVariant::sphp1, m);
    EXPECT_EQ(s1.clauses.size(), php.clauses.size() + 2 * m * (m + 1));
  }
  // 2 pigeon + 1 hole + 4 units before merging; the pigeon units merge with (x_i1, 1)
  auto tiny = gen_pigeonhole(PigeonVariant::sphp1, 1);
  EXPECT_EQ(tiny.clauses.size(), 7u);
  EXPECT_EQ(tiny.formula.size(), 5u);
  EXPECT_EQ(tiny.formula.weight(C({1})), Weight(2));
  EXPECT_THROW(gen_pigeonhole(PigeonVariant::php, 0), Error);
}

TEST(Pigeonhole, VariableLayout) {
  auto inst = gen_pigeonhole(PigeonVariant::sphp, 2);
  EXPECT_EQ(inst.var(1, 1), 1u);
  EXPECT_EQ(inst.var(3, 2), 6u);
  EXPECT_TRUE(inst.formula.contains(C({1, 2})));
  EXPECT_TRUE(inst.formula.contains(C({-2, -6})));
  EXPECT_EQ(parse_variant("sphp0"), PigeonVariant::sphp0);
  EXPECT_EQ(variant_name(PigeonVariant::sphp1), "sphp1");
  EXPECT_THROW(parse_variant("php9"), Error);
}

TEST(DualRail, Encoding) {
  // n_i = i, p_i = s + i
  Formula d = dual_rail_encode(F({{{1, -2}, kInf}}));
  EXPECT_EQ(d, F({{{-1, -4}, kInf}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}, {{-1, -3}, kInf}, {{-2, -4}, kInf}}, 4));
  EXPECT_EQ(maxsat_bruteforce(d).optimum, Weight(2));
  EXPECT_EQ(maxsat_bruteforce(dual_rail_encode(F({{{1}, kInf}, {{-1}, kInf}}))).optimum, Weight(2));
  Formula one = dual_rail_encode(Formula(1));
  EXPECT_EQ(one, F({{{1}, 1}, {{2}, 1}, {{-1, -2}, kInf}}, 2));
  EXPECT_EQ(maxsat_bruteforce(one).optimum, Weight(1));
  EXPECT_THROW(dual_rail_encode(F({{{1}, 1}})), Error);
}

TEST(DualRail, HornOutput) {
  Formula d = dual_rail_encode(gen_pigeonhole(PigeonVariant::php, 2).formula);
  for (const auto& [c, w] : d.entries()) {
    std::size_t pos = 0;
    for (auto l : c.literals()) pos += l.is_positive();
    EXPECT_LE(pos, 1u);
  }
  EXPECT_EQ(maxsat_bruteforce(d).optimum, Weight(7));  // frozen from the Python oracle
}

TEST(RandomFormula, DeterministicAndBounded) {
  EXPECT_EQ(random_formula(3, 5, 4, 0.0, 7), random_formula(3, 5, 4, 0.0, 7));
  EXPECT_NE(random_formula(6, 8, 4, 0.0, 7), random_formula(6, 8, 4, 0.0, 8));
  EXPECT_TRUE(random_formula(2, 0, 4, 0.0, 1).empty());
  Formula f = random_formula(10, 30, 5, 0.3, 1);
  EXPECT_EQ(f.size(), 30u);
  EXPECT_LE(f.num_vars(), 10u);
  EXPECT_TRUE(f.has_hard());
  for (const auto& [c, w] : f.entries()) {
    EXPECT_GE(c.size(), 1u);
    EXPECT_LE(c.size(), 3u);
    if (w.is_finite()) {
      EXPECT_GE(w, Weight(1));
      EXPECT_LE(w, Weight(5));
    }
  }
  EXPECT_TRUE(random_formula(3, 5, 4, 0.0, 7).is_soft());
}

}  // namespace
