#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arealab/tables.hpp"
#include "arealab/value.hpp"

namespace arealab {

inline constexpr double kDefaultIdentityTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultOracleCap = 100'000;

/// Two equal-length sequences r_1..r_n and h_1..h_n, n >= 1. No
/// hypotenuse constraint: the sequence identity holds for any real input.
template <class T>
struct SequencePair {
  std::vector<T> r;
  std::vector<T> h;

  SequencePair(std::vector<T> r_in, std::vector<T> h_in);
  std::size_t size() const { return r.size(); }
};

using IntegerSequencePair = SequencePair<std::int64_t>;
using RealSequencePair = SequencePair<double>;

extern template struct SequencePair<std::int64_t>;
extern template struct SequencePair<double>;

struct IdentityCheckResult {
  Value lhs;
  Value rhs;
  bool equal = false;
  PayloadMode mode = PayloadMode::Exact;
  /// Relative tolerance used in Floating mode; 0 in Exact mode.
  double tolerance = 0.0;
};

/// Evaluates both sides of
///   sum_{j=2}^n r_j h_j
///     = sum_{j=2}^n h_j (R_j + R_{j-1}) - 2 sum_{j=1}^{n-1} r_j sum_{k=1}^{n-j} h_{j+k},
/// with R_j = r_1 + ... + r_j. The right side uses a single suffix-sum pass.
IdentityCheckResult general_area_identity(const IntegerSequencePair& pair);
IdentityCheckResult general_area_identity(const RealSequencePair& pair,
                                          double tolerance = kDefaultIdentityTolerance);

/// sum_{2<=n<=x} f(n) * sum_{m<=n-1} f(m), in O(x). RangeError if x > limit.
Value bilinear_rhs(const FunctionTable& table, std::uint64_t x);

/// sum_{n<=x-1} sum_{j<=x-n} f(n) f(n+j) as a literal double loop. O(x^2);
/// BudgetExceeded above `oracle_cap`.
Value double_sum_lhs_oracle(const FunctionTable& table, std::uint64_t x,
                            std::uint64_t oracle_cap = kDefaultOracleCap, unsigned threads = 0);

/// ((sum f)^2 - sum f^2) / 2 over n <= x.
Value pair_sum_closed_form(const FunctionTable& table, std::uint64_t x);

/// Oracle double sum against bilinear_rhs: exact equality for exact tables,
/// relative `tolerance` otherwise.
IdentityCheckResult identity_check(const FunctionTable& table, std::uint64_t x,
                                   double tolerance = kDefaultIdentityTolerance,
                                   std::uint64_t oracle_cap = kDefaultOracleCap);

}  // namespace arealab
