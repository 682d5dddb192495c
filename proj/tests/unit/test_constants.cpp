#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "arealab/constants.hpp"
#include "arealab/errors.hpp"

using namespace arealab;

TEST(CMin, SmallExamples) {
  EXPECT_DOUBLE_EQ(c_min(build_table(FunctionKind::constant_one(), 5, 1), 5, 1), 0.4);
  EXPECT_DOUBLE_EQ(c_min(build_table(FunctionKind::mu_squared(), 8, 1), 8, 1), 15.0 / 32.0);
  EXPECT_DOUBLE_EQ(c_max(build_table(FunctionKind::mu_squared(), 8, 1), 8, 1), 15.0 / 32.0);
}

TEST(CMin, ZeroCorrelationWhenHypothesisFails) {
  // Lambda(1) = 0, so the shift-1 correlation is empty at x = 1.
  const auto t = build_table(FunctionKind::von_mangoldt(), 10, 1);
  EXPECT_THROW(c_min(t, 1, 1), ZeroCorrelation);
}

TEST(LocalDensity, SmallExamples) {
  EXPECT_DOUBLE_EQ(local_density(build_table(FunctionKind::constant_one(), 5, 1), 5, 1), 0.5);
  EXPECT_DOUBLE_EQ(local_density(build_table(FunctionKind::mu_squared(), 8, 1), 8, 1), 4.0 / 15.0);
  EXPECT_THROW(local_density(build_table(FunctionKind::constant_one(), 5, 1), 1, 1), DegenerateSum);
}

TEST(LocalDensity, ConstantOneIsTwoOverXMinusOne) {
  const auto t = build_table(FunctionKind::constant_one(), 100, 100);
  for (std::uint64_t x = 3; x <= 100; ++x) {
    for (std::uint64_t l : {1u, 2u, 50u}) {
      ASSERT_NEAR(local_density(t, x, l), 2.0 / static_cast<double>(x - 1), 1e-15) << x;
    }
  }
}

TEST(LocalDensity, LiouvilleMagnitudeIsSmall) {
  const auto t = build_table(FunctionKind::liouville(), 10'000, 1);
  const double v = local_density(t, 10'000, 1);
  EXPECT_TRUE(std::isfinite(v));
}

TEST(DOfX, SmallExamples) {
  EXPECT_DOUBLE_EQ(d_of_x(build_table(FunctionKind::constant_one(), 10), 10), 8.0 / 9.0);
  const auto lam = build_table(FunctionKind::von_mangoldt(), 100);
  // 100 = 3 + 97 = 11 + 89 = ..., so D(100) > 0.
  EXPECT_GT(d_of_x(lam, 100), 0.0);
  EXPECT_LT(d_of_x(lam, 100), 100.0);
}

TEST(ConstantsProperty, ReciprocalIdentity) {
  for (auto kind : {FunctionKind::von_mangoldt(), FunctionKind::divisor(2), FunctionKind::mu_squared(),
                    FunctionKind::euler_phi(), FunctionKind::master_upsilon()}) {
    const auto t = build_table(kind, 20'000, 6);
    for (std::uint64_t x : {100u, 1'000u, 20'000u}) {
      for (std::uint64_t l : {1u, 2u, 6u}) {
        double cm = 0;
        try {
          cm = c_min(t, x, l);
        } catch (const ZeroCorrelation&) {
          continue;
        }
        ASSERT_NEAR(cm * local_density(t, x, l) * static_cast<double>(x), 1.0, 1e-12) << kind.name();
      }
    }
  }
}

TEST(ConstantsProperty, PartitionIdentityExactAndFloating) {
  const auto d = build_table(FunctionKind::divisor(2), 600);
  const auto lam = build_table(FunctionKind::von_mangoldt(), 600);
  for (std::uint64_t x = 6; x <= 600; x += 2) {
    const auto pd = partition_check(d, x);
    ASSERT_TRUE(pd.sums_agree);
    ASSERT_LE(pd.residual, 1e-15);
    const auto pl = partition_check(lam, x);
    ASSERT_TRUE(pl.sums_agree);
    ASSERT_LE(pl.residual, 1e-12);
  }
}

TEST(ConstantsProperty, OddsOnlyTablePartitionStillExact) {
  std::vector<std::int64_t> odds(200);
  for (std::size_t i = 0; i < odds.size(); ++i) odds[i] = (i % 2 == 0) ? 1 : 0;  // f(n) = 1 for odd n
  const auto t = FunctionTable::from_exact(FunctionKind::custom("odd"), 200, odds);
  for (std::uint64_t x = 4; x <= 200; x += 2) {
    const auto p = partition_check(t, x);
    ASSERT_TRUE(p.sums_agree);
    ASSERT_LE(p.residual, 1e-15);
  }
}

TEST(DensityEstimate, FieldsAgreeWithSingleOps) {
  const auto t = build_table(FunctionKind::mu_squared(), 1'000, 3);
  const auto e = estimate_density(t, 1'000, 3);
  ASSERT_TRUE(e.c_min);
  EXPECT_DOUBLE_EQ(*e.c_min, c_min(t, 1'000, 3));
  EXPECT_DOUBLE_EQ(e.local_density, local_density(t, 1'000, 3));
  ASSERT_TRUE(e.d_ratio);
  EXPECT_NEAR(*e.d_ratio, d_of_x(t, 1'000) / 1'000.0, 1e-15);
  EXPECT_GE(e.local_density, 0.0);
  EXPECT_LE(e.local_density, 1.0);
}

TEST(Claims, KnownIdsAndErrors) {
  const auto ids = known_claims();
  EXPECT_EQ(ids.size(), 12u);
  const std::vector<std::uint64_t> grid{1'000, 10'000};
  EXPECT_THROW(evaluate_claim("thm0.0-nothing", grid), UnknownClaim);
  const std::vector<std::uint64_t> bad{1'000, 1'000};
  EXPECT_THROW(evaluate_claim("cor6.4-musq", bad), InvalidArgument);
  EXPECT_THROW(evaluate_claim("cor6.4-musq", {}), InvalidArgument);
}

TEST(Claims, TwinPrimeBoundHoldsWithEqualityAtCMin) {
  const std::vector<std::uint64_t> grid{1'000, 10'000, 100'000};
  const auto r = evaluate_claim("thm3.1-twin", grid);
  ASSERT_EQ(r.verdicts.size(), 3u);
  EXPECT_EQ(r.shift, 2u);
  const auto t = build_table(FunctionKind::von_mangoldt(), 100'000, 2);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_DOUBLE_EQ(r.constant[i], c_min(t, grid[i], 2));
    // Area inequality at C = c_min: type1 == bilinear / (C x).
    const double rebuilt = bilinear_rhs(t, grid[i]).as_double() / (r.constant[i] * static_cast<double>(grid[i]));
    EXPECT_NEAR(rebuilt / r.computed[i].as_double(), 1.0, 1e-12);
    EXPECT_EQ(r.verdicts[i], Verdict::Consistent);
  }
}

TEST(Claims, MuSquaredRatioTracksShape) {
  const std::vector<std::uint64_t> grid{1'000, 100'000};
  const auto r = evaluate_claim("cor6.4-musq", grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ratio = r.computed[i].as_double() / r.bound[i];
    EXPECT_NEAR(ratio, 1.0, 0.05);
  }
}

TEST(Claims, GoldbachVacuousWhereType2Vanishes) {
  // At x = 3 the only pair is (1, 2) and Lambda(1) = 0.
  const std::vector<std::uint64_t> grid{3, 4, 100};
  const auto r = evaluate_claim("thm8.1-goldbach", grid);
  EXPECT_EQ(r.verdicts[0], Verdict::Vacuous);
  EXPECT_TRUE(std::isnan(r.bound[0]));
  EXPECT_FALSE(r.shift);
}

TEST(Claims, LiouvilleEnvelopeUsesConfiguredParameters) {
  const std::vector<std::uint64_t> grid{1'000, 10'000};
  ClaimConfig loose;
  loose.epsilon = 0.9;
  loose.c = 0.01;
  const auto r = evaluate_claim("thm5.2-liouville", grid, loose);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = static_cast<double>(grid[i]);
    const double expected =
        std::pow(x, 1.9) * std::exp(-2 * 0.01 * std::pow(std::log(x), 0.8) * std::pow(std::log(std::log(x)), -0.2));
    EXPECT_NEAR(r.bound[i] / expected, 1.0, 1e-12);
    EXPECT_EQ(r.verdicts[i], Verdict::Consistent);
  }
}

TEST(Claims, DeterministicAcrossThreadCounts) {
  const std::vector<std::uint64_t> grid{1'000, 2'000, 5'000, 10'000};
  ClaimConfig one;
  one.threads = 1;
  ClaimConfig many;
  many.threads = 4;
  for (auto id : known_claims()) {
    const auto a = evaluate_claim(id, grid, one);
    const auto b = evaluate_claim(id, grid, many);
    ASSERT_EQ(a.computed, b.computed) << id;
    ASSERT_EQ(a.verdicts, b.verdicts) << id;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      ASSERT_TRUE(a.constant[i] == b.constant[i] || (std::isnan(a.constant[i]) && std::isnan(b.constant[i])));
    }
  }
}
