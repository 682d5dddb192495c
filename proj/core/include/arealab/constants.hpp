#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arealab/correlation.hpp"
#include "arealab/tables.hpp"

namespace arealab {

/// Smallest C with type1(x, l) >= bilinear_rhs(x) / (C x), i.e.
/// bilinear_rhs(x) / (x type1(x, l)). ZeroCorrelation if type1 vanishes,
/// DegenerateSum if the double sum does.
double c_min(const FunctionTable& table, std::uint64_t x, std::uint64_t shift);

/// Same quantity read as the constant of the reversed (upper-bound)
/// inequality. Kept as a separate name so reports can label it.
double c_max(const FunctionTable& table, std::uint64_t x, std::uint64_t shift);

/// N(x, l)/x = type1(x, l) / bilinear_rhs(x): the share of the double sum
/// carried by shift l.
double local_density(const FunctionTable& table, std::uint64_t x, std::uint64_t shift);

/// D(x) = x type2(x) / bilinear_rhs(x).
double d_of_x(const FunctionTable& table, std::uint64_t x);

struct DensityEstimate {
  FunctionKind kind;
  std::uint64_t x = 0;
  std::uint64_t shift = 0;
  /// Empty when type1 vanishes.
  std::optional<double> c_min;
  std::optional<double> c_max;
  double local_density = 0.0;
  /// D(x)/x; empty when x < 2.
  std::optional<double> d_ratio;
};

DensityEstimate estimate_density(const FunctionTable& table, std::uint64_t x, std::uint64_t shift);

/// Split of the double sum at x into its type-2 diagonal and the rest.
struct PartitionCheck {
  Value total;         ///< bilinear_rhs(x)
  Value diagonal;      ///< type2(x)
  Value off_diagonal;  ///< literal double sum excluding j = x - 2n
  double d_over_x = 0.0;
  double diagonal_ratio = 0.0;
  /// diagonal + off_diagonal == total: exactly for exact tables, to
  /// `tolerance` relative otherwise.
  bool sums_agree = false;
  /// |d_over_x + diagonal_ratio - 1|
  double residual = 0.0;
};

PartitionCheck partition_check(const FunctionTable& table, std::uint64_t x, double tolerance = 1e-12,
                               std::uint64_t oracle_cap = kDefaultOracleCap);

// ---------------------------------------------------------------------------
// Claim harness

enum class Verdict { Consistent, Violated, Vacuous };
std::string_view to_string(Verdict v);

struct ClaimConfig {
  /// Shift used by the type-1 claims other than the twin-prime one.
  std::uint64_t shift = 1;
  unsigned divisor_order = 3;
  /// Liouville envelope parameters.
  double epsilon = 0.1;
  double c = 1.0;
  /// Allowed relative gap between a computed sum and its claimed shape.
  double shape_tolerance = 0.25;
  unsigned threads = 0;
};

struct ClaimReport {
  std::string claim_id;
  std::string description;
  FunctionKind kind;
  /// Shift for type-1 claims; empty for type-2 claims.
  std::optional<std::uint64_t> shift;
  std::string constant_name;
  std::vector<std::uint64_t> grid;
  std::vector<Value> computed;
  /// Claimed bound evaluated at x with the measured constant; NaN when vacuous.
  std::vector<double> bound;
  /// Measured constant (c_min, D(x) or N/x); NaN when undefined.
  std::vector<double> constant;
  std::vector<double> c_max;
  std::vector<Verdict> verdicts;
  std::string notes;
};

/// Claim ids understood by evaluate_claim, in a stable order.
std::span<const std::string_view> known_claims();

/// Evaluates one claim on a strictly increasing grid. Never reports a claim
/// as proven; only consistent / violated / vacuous per grid point.
ClaimReport evaluate_claim(std::string_view claim_id, std::span<const std::uint64_t> grid,
                           const ClaimConfig& config = {});

}  // namespace arealab
