#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arealab/area_identity.hpp"
#include "arealab/tables.hpp"

namespace arealab {

struct CorrelationResult {
  FunctionKind kind;
  std::uint64_t x = 0;
  /// Shift l for a type-1 sum; empty for a type-2 sum.
  std::optional<std::uint64_t> shift;
  Value value;
  /// Number of n whose product f(n) f(partner) is nonzero.
  std::uint64_t terms = 0;
  /// Type-2 only, even x only: f(x/2)^2, kept out of `value`.
  std::optional<Value> middle_term;

  bool is_type2() const { return !shift.has_value(); }
};

/// sum_{n<=x} f(n) f(n+l). Needs f up to x + l; never pads with zeros.
CorrelationResult type1(const FunctionTable& table, std::uint64_t x, std::uint64_t shift);

/// sum_{1<=n<x/2} f(n) f(x-n), strict; the even-x middle term is reported
/// separately. Requires 2 <= x <= limit.
CorrelationResult type2(const FunctionTable& table, std::uint64_t x);

/// type1 for each shift, in input order. The whole list is range-checked
/// before any work starts.
std::vector<CorrelationResult> type1_sweep(const FunctionTable& table, std::uint64_t x,
                                           std::span<const std::uint64_t> shifts, unsigned threads = 0);

/// Literal sum_{n<=x-1} sum_{j<=x-n, j != x-2n} f(n) f(n+j): the double sum
/// with the type-2 diagonal removed. O(x^2), capped like the oracle.
Value off_diagonal_sum(const FunctionTable& table, std::uint64_t x,
                       std::uint64_t oracle_cap = kDefaultOracleCap);

/// 1 - type2(x) / bilinear_rhs(x): the off-diagonal share C(x)/x of the
/// double sum. DegenerateSum when the double sum vanishes.
double diagonal_ratio(const FunctionTable& table, std::uint64_t x);

}  // namespace arealab
