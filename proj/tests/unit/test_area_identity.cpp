#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "arealab/area_identity.hpp"
#include "arealab/errors.hpp"
#include "oracles.hpp"

using namespace arealab;

namespace {

std::vector<std::int64_t> random_ints(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

FunctionTable table_of(std::vector<std::int64_t> values) {
  const auto n = values.size();
  return FunctionTable::from_exact(FunctionKind::custom("t"), n, std::move(values));
}

}  // namespace

TEST(GeneralIdentity, TwoOnes) {
  const auto r = general_area_identity(IntegerSequencePair({1, 1}, {1, 1}));
  EXPECT_EQ(r.lhs, Value::exact(1));
  EXPECT_EQ(r.rhs, Value::exact(1));
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.mode, PayloadMode::Exact);
}

TEST(GeneralIdentity, SingleElementIsEmptySums) {
  const auto r = general_area_identity(IntegerSequencePair({7}, {-3}));
  EXPECT_EQ(r.lhs, Value::exact(0));
  EXPECT_EQ(r.rhs, Value::exact(0));
  EXPECT_TRUE(r.equal);
}

TEST(GeneralIdentity, RejectsMismatchedOrEmpty) {
  EXPECT_THROW(IntegerSequencePair({1, 2}, {1}), InvalidArgument);
  EXPECT_THROW(IntegerSequencePair({}, {}), InvalidArgument);
  EXPECT_THROW(RealSequencePair({NAN}, {1.0}), InvalidArgument);
}

// The hypotenuse constraint is not needed: random signed sequences almost
// never satisfy it, and the identity still holds exactly.
TEST(GeneralIdentityProperty, RandomIntegerPairsMatchQuadraticOracle) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> len(1, 50);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = len(rng);
    auto r = random_ints(rng, n, 1000);
    auto h = random_ints(rng, n, 1000);
    const auto [lhs, rhs] = oracle::sequence_identity_sides<std::int64_t, exact_int>(r, h);
    const auto got = general_area_identity(IntegerSequencePair(r, h));
    ASSERT_TRUE(got.equal);
    ASSERT_EQ(got.lhs, Value::exact(lhs));
    ASSERT_EQ(got.rhs, Value::exact(rhs));
  }
}

TEST(GeneralIdentityProperty, RandomRealPairsWithinTolerance) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> val(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 100;
    std::vector<double> r(n), h(n);
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = val(rng);
      h[i] = val(rng);
    }
    const auto got = general_area_identity(RealSequencePair(r, h));
    ASSERT_EQ(got.mode, PayloadMode::Floating);
    ASSERT_TRUE(got.equal) << to_string(got.lhs) << " vs " << to_string(got.rhs);
  }
}

TEST(Bilinear, SmallExamples) {
  EXPECT_EQ(bilinear_rhs(build_table(FunctionKind::constant_one(), 5), 5), Value::exact(10));
  EXPECT_EQ(bilinear_rhs(build_table(FunctionKind::divisor(2), 6), 6), Value::exact(79));
  const double l2 = std::log(2.0), l3 = std::log(3.0);
  EXPECT_NEAR(bilinear_rhs(build_table(FunctionKind::von_mangoldt(), 4), 4).as_double(), l2 * l3 + l2 * (l2 + l3),
              1e-15);
}

TEST(Oracle, SmallExamplesAndEmptyRange) {
  EXPECT_EQ(double_sum_lhs_oracle(build_table(FunctionKind::constant_one(), 5), 5), Value::exact(10));
  EXPECT_EQ(double_sum_lhs_oracle(build_table(FunctionKind::divisor(2), 6), 6), Value::exact(79));
  EXPECT_EQ(double_sum_lhs_oracle(build_table(FunctionKind::divisor(2), 6), 1), Value::exact(0));
  EXPECT_EQ(double_sum_lhs_oracle(build_table(FunctionKind::von_mangoldt(), 6), 1), Value::floating(0.0));
}

TEST(Oracle, RangeAndBudgetErrors) {
  const auto t = build_table(FunctionKind::divisor(2), 100, 50);
  EXPECT_THROW(double_sum_lhs_oracle(t, 101), RangeError);  // headroom is not part of the limit
  EXPECT_THROW(double_sum_lhs_oracle(t, 100, 99), BudgetExceeded);
  EXPECT_THROW(bilinear_rhs(t, 101), RangeError);
  EXPECT_THROW(pair_sum_closed_form(t, 101), RangeError);
  EXPECT_THROW(bilinear_rhs(t, 0), InvalidArgument);
}

TEST(ClosedForm, SmallExamples) {
  EXPECT_EQ(pair_sum_closed_form(build_table(FunctionKind::constant_one(), 5), 5), Value::exact(10));
  EXPECT_EQ(pair_sum_closed_form(build_table(FunctionKind::mu_squared(), 8), 8), Value::exact(15));
  EXPECT_EQ(pair_sum_closed_form(build_table(FunctionKind::divisor(2), 6), 6), Value::exact(79));
}

TEST(IdentityCheck, NamedExamples) {
  const auto d = identity_check(build_table(FunctionKind::divisor(2), 500), 500);
  EXPECT_TRUE(d.equal);
  EXPECT_EQ(d.mode, PayloadMode::Exact);

  const auto lam = identity_check(build_table(FunctionKind::von_mangoldt(), 500), 500, 1e-9);
  EXPECT_TRUE(lam.equal);
  EXPECT_EQ(lam.mode, PayloadMode::Floating);

  const auto liou = identity_check(build_table(FunctionKind::liouville(), 500), 500);
  EXPECT_TRUE(liou.equal);
  EXPECT_EQ(liou.lhs, liou.rhs);
}

TEST(BilinearProperty, ThreeRoutesAgreeOnRandomSignedTables) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 400;
    const auto t = table_of(random_ints(rng, n, 1'000'000));
    for (std::uint64_t x : {std::uint64_t{1}, std::uint64_t{n / 2 + 1}, std::uint64_t{n}}) {
      const auto b = bilinear_rhs(t, x);
      ASSERT_EQ(b, double_sum_lhs_oracle(t, x));
      ASSERT_EQ(b, pair_sum_closed_form(t, x));
    }
  }
}

TEST(BilinearProperty, IncrementalStepIsValueTimesPrefix) {
  const auto t = build_table(FunctionKind::euler_phi(), 2'000);
  const auto s = prefix_sums(t);
  for (std::uint64_t x = 2; x <= 2'000; x += 37) {
    const exact_int step = bilinear_rhs(t, x).as_exact() - bilinear_rhs(t, x - 1).as_exact();
    ASSERT_EQ(step, exact_int(t.exact(x)) * s.exact(x - 1));
  }
}

TEST(BilinearProperty, NonNegativeForNonNegativeKinds) {
  for (auto k : {FunctionKind::mu_squared(), FunctionKind::big_omega(), FunctionKind::von_mangoldt()}) {
    const auto t = build_table(k, 1'000);
    for (std::uint64_t x = 1; x <= 1'000; x += 13) ASSERT_GE(bilinear_rhs(t, x).sign(), 0) << k.name();
  }
}

TEST(OracleDeterminism, ThreadCountDoesNotChangeFloatingResult) {
  const auto t = build_table(FunctionKind::master_upsilon(), 3'000);
  const auto one = double_sum_lhs_oracle(t, 3'000, kDefaultOracleCap, 1);
  const auto four = double_sum_lhs_oracle(t, 3'000, kDefaultOracleCap, 4);
  EXPECT_EQ(one.as_double(), four.as_double());
}
