#include "arealab/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "arealab/errors.hpp"
#include "arealab/parallel.hpp"

namespace arealab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

long double nonzero_total(const FunctionTable& table, std::uint64_t x, const char* what) {
  const Value total = bilinear_rhs(table, x);
  if (total.is_zero()) {
    throw DegenerateSum(std::string(what) + ": double sum of " + table.kind().name() + " vanishes at x = " +
                        std::to_string(x));
  }
  return total.as_long_double();
}

}  // namespace

double c_min(const FunctionTable& table, std::uint64_t x, std::uint64_t shift) {
  const Value corr = type1(table, x, shift).value;
  if (corr.is_zero()) {
    throw ZeroCorrelation("c_min: sum f(n)f(n+" + std::to_string(shift) + ") of " + table.kind().name() +
                          " is zero at x = " + std::to_string(x));
  }
  const long double total = nonzero_total(table, x, "c_min");
  return static_cast<double>(total / (static_cast<long double>(x) * corr.as_long_double()));
}

double c_max(const FunctionTable& table, std::uint64_t x, std::uint64_t shift) { return c_min(table, x, shift); }

double local_density(const FunctionTable& table, std::uint64_t x, std::uint64_t shift) {
  const Value corr = type1(table, x, shift).value;
  const long double total = nonzero_total(table, x, "local_density");
  return static_cast<double>(corr.as_long_double() / total);
}

double d_of_x(const FunctionTable& table, std::uint64_t x) {
  const long double total = nonzero_total(table, x, "d_of_x");
  const Value diag = type2(table, x).value;
  return static_cast<double>(static_cast<long double>(x) * diag.as_long_double() / total);
}

DensityEstimate estimate_density(const FunctionTable& table, std::uint64_t x, std::uint64_t shift) {
  const Value corr = type1(table, x, shift).value;
  const long double total = nonzero_total(table, x, "estimate_density");
  DensityEstimate out{table.kind(), x, shift, std::nullopt, std::nullopt, 0.0, std::nullopt};
  out.local_density = static_cast<double>(corr.as_long_double() / total);
  if (!corr.is_zero()) {
    out.c_min = static_cast<double>(total / (static_cast<long double>(x) * corr.as_long_double()));
    out.c_max = out.c_min;
  }
  if (x >= 2) out.d_ratio = static_cast<double>(type2(table, x).value.as_long_double() / total);
  return out;
}

PartitionCheck partition_check(const FunctionTable& table, std::uint64_t x, double tolerance,
                               std::uint64_t oracle_cap) {
  PartitionCheck out;
  out.total = bilinear_rhs(table, x);
  out.diagonal = type2(table, x).value;
  out.off_diagonal = off_diagonal_sum(table, x, oracle_cap);
  if (out.total.is_exact()) {
    out.sums_agree = out.diagonal.as_exact() + out.off_diagonal.as_exact() == out.total.as_exact();
  } else {
    out.sums_agree = values_match(
        Value::floating(static_cast<double>(out.diagonal.as_long_double() + out.off_diagonal.as_long_double())),
        out.total, tolerance);
  }
  out.d_over_x = d_of_x(table, x) / static_cast<double>(x);
  out.diagonal_ratio = diagonal_ratio(table, x);
  out.residual = std::fabs(out.d_over_x + out.diagonal_ratio - 1.0);
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Violated: return "violated";
    case Verdict::Vacuous: return "vacuous";
  }
  return "unknown";
}

namespace {

enum class ClaimShape { LowerType1, EstimateType2, LiouvilleEnvelope };

struct ClaimDef {
  std::string_view id;
  ClaimShape shape;
  std::string_view description;
  // Shift fixed by the claim itself; otherwise ClaimConfig::shift.
  std::optional<std::uint64_t> fixed_shift;
};

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
constexpr double kPi4 = kPi2 * kPi2;

constexpr std::array<ClaimDef, 12> kClaims{{
    {"thm3.1-twin", ClaimShape::LowerType1,
     "sum Lambda(n)Lambda(n+2) >= (1+o(1)) x / (2 C(2))", 2},
    {"cor6.1-divisor", ClaimShape::LowerType1, "sum d(n)d(n+l) >= (1+o(1)) x log^2 x / (2 C(l))", std::nullopt},
    {"cor6.2-divisor-l", ClaimShape::LowerType1,
     "sum d_l(n)d_l(n+k) >= (1+o(1)) (1/(l-1)!)(1 - 1/(2(l-1)!)) x log^{2(l-1)} x / C(k)", std::nullopt},
    {"cor6.3-phi", ClaimShape::LowerType1, "sum phi(n)phi(n+l) >= (1+o(1)) (9/(2 pi^4)) x^3 / C(l)", std::nullopt},
    {"cor6.4-musq", ClaimShape::LowerType1, "sum mu^2(n)mu^2(n+l) >= (1+o(1)) (18/pi^4) x / C(l)", std::nullopt},
    {"thm7.2-upsilon", ClaimShape::LowerType1,
     "sum Y(n)Y(n+l) >= (1+o(1)) x (log log x)^2 / (2 C(l)), provided Y(n)Y(n+l) > 0", std::nullopt},
    {"thm7.3-upsilon-type2", ClaimShape::EstimateType2,
     "sum_{n<x/2} Y(n)Y(x-n) = (1+o(1)) (x/2) D(x) (log log x)^2", std::nullopt},
    {"thm8.1-goldbach", ClaimShape::EstimateType2, "sum_{n<x/2} Lambda(n)Lambda(x-n) = (1+o(1)) (x/2) D(x)",
     std::nullopt},
    {"thm9.1-divisor-type2", ClaimShape::EstimateType2, "sum_{n<x/2} d(n)d(x-n) = D(x)(1+o(1)) x log^2 x / 2",
     std::nullopt},
    {"thm9.2-phi-type2", ClaimShape::EstimateType2, "sum_{n<x/2} phi(n)phi(x-n) = (1+o(1)) D(x) (9/(2 pi^4)) x^3",
     std::nullopt},
    {"thm9.3-divisor-l-type2", ClaimShape::EstimateType2,
     "sum_{n<x/2} d_l(n)d_l(x-n) = (1+o(1)) D(x) (1/(l-1)!)(1 - 1/(2(l-1)!)) x log^{2(l-1)} x", std::nullopt},
    {"thm5.2-liouville", ClaimShape::LiouvilleEnvelope,
     "|sum lambda(n)lambda(n+1)| << x^{1+eps} exp(-2c (log x)^{4/5} (log log x)^{-1/5})", 1},
}};

constexpr std::array<std::string_view, kClaims.size()> kClaimIds = [] {
  std::array<std::string_view, kClaims.size()> ids{};
  for (std::size_t i = 0; i < kClaims.size(); ++i) ids[i] = kClaims[i].id;
  return ids;
}();

const ClaimDef& find_claim(std::string_view id) {
  for (const auto& c : kClaims) {
    if (c.id == id) return c;
  }
  throw UnknownClaim("unknown claim id '" + std::string(id) + "'");
}

FunctionKind claim_kind(std::string_view id, const ClaimConfig& config) {
  if (id == "thm3.1-twin" || id == "thm8.1-goldbach") return FunctionKind::von_mangoldt();
  if (id == "cor6.1-divisor" || id == "thm9.1-divisor-type2") return FunctionKind::divisor(2);
  if (id == "cor6.2-divisor-l" || id == "thm9.3-divisor-l-type2") return FunctionKind::divisor(config.divisor_order);
  if (id == "cor6.3-phi" || id == "thm9.2-phi-type2") return FunctionKind::euler_phi();
  if (id == "cor6.4-musq") return FunctionKind::mu_squared();
  if (id == "thm7.2-upsilon" || id == "thm7.3-upsilon-type2") return FunctionKind::master_upsilon();
  return FunctionKind::liouville();
}

double divisor_l_coefficient(unsigned l) {
  const double fact = std::tgamma(static_cast<double>(l));  // (l-1)!
  return (1.0 / fact) * (1.0 - 1.0 / (2.0 * fact));
}

// Main term of the claimed shape, without the measured constant.
double main_term(std::string_view id, double x, const ClaimConfig& config) {
  const double log_x = std::log(x);
  const double loglog_x = std::log(log_x);
  if (id == "thm3.1-twin" || id == "thm8.1-goldbach") return x / 2.0;
  if (id == "cor6.1-divisor" || id == "thm9.1-divisor-type2") return x * log_x * log_x / 2.0;
  if (id == "cor6.2-divisor-l" || id == "thm9.3-divisor-l-type2") {
    const unsigned l = config.divisor_order;
    return divisor_l_coefficient(l) * x * std::pow(log_x, 2.0 * (l - 1));
  }
  if (id == "cor6.3-phi" || id == "thm9.2-phi-type2") return 9.0 / (2.0 * kPi4) * x * x * x;
  if (id == "cor6.4-musq") return 18.0 / kPi4 * x;
  if (id == "thm7.2-upsilon" || id == "thm7.3-upsilon-type2") return x / 2.0 * loglog_x * loglog_x;
  // Liouville envelope.
  return std::pow(x, 1.0 + config.epsilon) *
         std::exp(-2.0 * config.c * std::pow(log_x, 0.8) * std::pow(loglog_x, -0.2));
}

struct GridPoint {
  Value computed;
  double bound = kNaN;
  double constant = kNaN;
  Verdict verdict = Verdict::Vacuous;
};

GridPoint evaluate_point(const ClaimDef& def, const FunctionTable& table, std::uint64_t x, std::uint64_t shift,
                         const ClaimConfig& config) {
  GridPoint p;
  const double xd = static_cast<double>(x);
  const Value total = bilinear_rhs(table, x);
  const long double total_ld = total.as_long_double();
  const double shape = main_term(def.id, xd, config);

  switch (def.shape) {
    case ClaimShape::LowerType1: {
      p.computed = type1(table, x, shift).value;
      // Positivity hypothesis fails: nothing to test at this x.
      if (p.computed.sign() <= 0 || total.sign() <= 0) return p;
      p.constant = static_cast<double>(total_ld / (static_cast<long double>(xd) * p.computed.as_long_double()));
      p.bound = shape / p.constant;
      const double ratio = p.computed.as_double() / p.bound;
      p.verdict = ratio >= 1.0 - config.shape_tolerance ? Verdict::Consistent : Verdict::Violated;
      return p;
    }
    case ClaimShape::EstimateType2: {
      p.computed = type2(table, x).value;
      if (p.computed.sign() <= 0 || total.sign() <= 0) return p;
      p.constant = static_cast<double>(static_cast<long double>(xd) * p.computed.as_long_double() / total_ld);
      p.bound = p.constant * shape;
      const double ratio = p.computed.as_double() / p.bound;
      p.verdict = std::fabs(ratio - 1.0) <= config.shape_tolerance ? Verdict::Consistent : Verdict::Violated;
      return p;
    }
    case ClaimShape::LiouvilleEnvelope: {
      p.computed = type1(table, x, shift).value;
      if (!total.is_zero()) p.constant = static_cast<double>(p.computed.as_long_double() / total_ld);
      p.bound = shape;
      p.verdict = std::fabs(p.computed.as_double()) <= p.bound ? Verdict::Consistent : Verdict::Violated;
      return p;
    }
  }
  return p;
}

std::string claim_notes(const ClaimDef& def, const ClaimConfig& config) {
  switch (def.shape) {
    case ClaimShape::LowerType1:
      return "constant = c_min(x) measured at each x; bound = claimed main term / c_min; consistent iff "
             "computed/bound >= 1 - " + format_double(config.shape_tolerance) +
             "; vacuous where the shifted correlation is not positive";
    case ClaimShape::EstimateType2:
      return "constant = D(x) = x type2 / bilinear measured at each x; bound = D(x) * claimed main term; "
             "consistent iff |computed/bound - 1| <= " + format_double(config.shape_tolerance) +
             "; vacuous where type2 is not positive";
    case ClaimShape::LiouvilleEnvelope:
      return "constant = local density N(x,1)/x; envelope with eps = " + format_double(config.epsilon) +
             ", c = " + format_double(config.c) + " and implied constant 1; consistent iff |computed| <= bound";
  }
  return {};
}

}  // namespace

std::span<const std::string_view> known_claims() { return kClaimIds; }

ClaimReport evaluate_claim(std::string_view claim_id, std::span<const std::uint64_t> grid, const ClaimConfig& config) {
  const ClaimDef& def = find_claim(claim_id);
  if (grid.empty()) throw InvalidArgument("claim grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 3) throw InvalidArgument("claim grid points must be >= 3");
    if (i > 0 && grid[i] <= grid[i - 1]) throw InvalidArgument("claim grid must be strictly increasing");
  }
  if (!(config.shape_tolerance > 0)) throw InvalidArgument("shape tolerance must be positive");
  if (!(config.epsilon > 0 && config.epsilon < 1)) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (config.shift == 0) throw InvalidArgument("claim shift must be >= 1");

  ClaimReport report;
  report.claim_id = std::string(def.id);
  report.description = std::string(def.description);
  report.kind = claim_kind(def.id, config);
  const std::uint64_t shift = def.fixed_shift.value_or(config.shift);
  if (def.shape != ClaimShape::EstimateType2) report.shift = shift;
  report.constant_name = def.shape == ClaimShape::LowerType1       ? "c_min"
                         : def.shape == ClaimShape::EstimateType2 ? "D(x)"
                                                                   : "N(x,1)/x";
  report.grid.assign(grid.begin(), grid.end());
  report.notes = claim_notes(def, config);

  BuildOptions build;
  build.threads = config.threads;
  const FunctionTable table = build_table(report.kind, grid.back(), report.shift.value_or(0), build);

  const auto points = parallel_map<GridPoint>(grid.size(), config.threads, [&](std::size_t i) {
    return evaluate_point(def, table, grid[i], shift, config);
  });
  for (const auto& p : points) {
    report.computed.push_back(p.computed);
    report.bound.push_back(p.bound);
    report.constant.push_back(p.constant);
    report.c_max.push_back(def.shape == ClaimShape::LowerType1 ? p.constant : kNaN);
    report.verdicts.push_back(p.verdict);
  }
  return report;
}

}  // namespace arealab
