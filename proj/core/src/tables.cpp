#include "arealab/tables.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "arealab/errors.hpp"
#include "arealab/parallel.hpp"

namespace arealab {

// ---------------------------------------------------------------------------
// FunctionTable

FunctionTable::FunctionTable(FunctionKind kind, std::uint64_t limit,
                             std::variant<std::vector<std::int64_t>, std::vector<double>> payload)
    : kind_(std::move(kind)), limit_(limit), payload_(std::move(payload)) {
  if (limit_ == 0) throw InvalidArgument("table limit must be >= 1");
  if (extent() < limit_) throw InvalidArgument("table payload shorter than its limit");
}

FunctionTable FunctionTable::from_exact(FunctionKind kind, std::uint64_t limit, std::vector<std::int64_t> values) {
  if (!kind.is_integer_valued() && kind.tag() != FunctionKind::Tag::Custom) {
    throw InvalidArgument("exact payload requested for real-valued kind " + kind.name());
  }
  return FunctionTable(std::move(kind), limit, std::move(values));
}

FunctionTable FunctionTable::from_floating(FunctionKind kind, std::uint64_t limit, std::vector<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidArgument("table values must be finite");
  }
  return FunctionTable(std::move(kind), limit, std::move(values));
}

std::uint64_t FunctionTable::extent() const {
  return std::visit([](const auto& v) { return static_cast<std::uint64_t>(v.size()); }, payload_);
}

void FunctionTable::require_extent(std::uint64_t last, const char* what) const {
  if (last > extent()) {
    throw RangeError(std::string(what) + ": needs f(" + std::to_string(last) + ") but table " + kind_.name() +
                     " covers 1.." + std::to_string(extent()) + " (limit " + std::to_string(limit_) +
                     " + headroom " + std::to_string(shift_headroom()) + ")");
  }
}

void FunctionTable::require_limit(std::uint64_t last, const char* what) const {
  if (last > limit_) {
    throw RangeError(std::string(what) + ": x = " + std::to_string(last) + " exceeds table limit " +
                     std::to_string(limit_) + " for " + kind_.name());
  }
}

std::int64_t FunctionTable::exact(std::uint64_t n) const {
  const auto* v = std::get_if<std::vector<std::int64_t>>(&payload_);
  if (v == nullptr) throw InvalidArgument("table " + kind_.name() + " holds floating values");
  if (n == 0 || n > v->size()) require_extent(n == 0 ? extent() + 1 : n, "exact");
  return (*v)[n - 1];
}

double FunctionTable::real(std::uint64_t n) const {
  if (n == 0 || n > extent()) require_extent(n == 0 ? extent() + 1 : n, "real");
  return std::visit([n](const auto& v) { return static_cast<double>(v[n - 1]); }, payload_);
}

Value FunctionTable::at(std::uint64_t n) const {
  return mode() == PayloadMode::Exact ? Value::exact(exact(n)) : Value::floating(real(n));
}

std::span<const std::int64_t> FunctionTable::exact_values() const {
  const auto* v = std::get_if<std::vector<std::int64_t>>(&payload_);
  if (v == nullptr) throw InvalidArgument("table " + kind_.name() + " holds floating values");
  return *v;
}

std::span<const double> FunctionTable::real_values() const {
  const auto* v = std::get_if<std::vector<double>>(&payload_);
  if (v == nullptr) throw InvalidArgument("table " + kind_.name() + " holds exact values");
  return *v;
}

// ---------------------------------------------------------------------------
// Segmented multiplicative sieve
//
// Every kind is a function of the factorisation of n. A segment [lo, hi]
// keeps the unfactored remainder of each n, divides out every base prime
// p <= sqrt(hi) completely (reporting p^k to the policy), and whatever is
// left above 1 is a single large prime. Segments are independent, so
// segmented and monolithic runs agree bit for bit.

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t m = p * p; m <= bound; m += p) composite[m] = true;
  }
  return primes;
}

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::int64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * static_cast<std::int64_t>(n - k + i) / static_cast<std::int64_t>(i);
  return result;
}

struct DivisorPolicy {
  using State = std::int64_t;
  using Out = std::int64_t;
  unsigned order;
  State init() const { return 1; }
  void apply(State& s, std::uint64_t, unsigned k, std::uint64_t) const { s *= binomial(k + order - 1, order - 1); }
  Out finish(const State& s, std::uint64_t) const { return s; }
};

struct PhiPolicy {
  using State = std::int64_t;
  using Out = std::int64_t;
  State init() const { return 1; }
  void apply(State& s, std::uint64_t p, unsigned, std::uint64_t pk) const {
    s *= static_cast<std::int64_t>((pk / p) * (p - 1));
  }
  Out finish(const State& s, std::uint64_t) const { return s; }
};

struct MuSquaredPolicy {
  using State = std::int64_t;
  using Out = std::int64_t;
  State init() const { return 1; }
  void apply(State& s, std::uint64_t, unsigned k, std::uint64_t) const {
    if (k > 1) s = 0;
  }
  Out finish(const State& s, std::uint64_t) const { return s; }
};

struct BigOmegaPolicy {
  using State = std::int64_t;
  using Out = std::int64_t;
  State init() const { return 0; }
  void apply(State& s, std::uint64_t, unsigned k, std::uint64_t) const { s += k; }
  Out finish(const State& s, std::uint64_t) const { return s; }
};

struct LiouvillePolicy : BigOmegaPolicy {
  Out finish(const State& s, std::uint64_t) const { return (s % 2 == 0) ? 1 : -1; }
};

struct VonMangoldtPolicy {
  struct State {
    unsigned distinct = 0;
    std::uint64_t prime = 0;
  };
  using Out = double;
  State init() const { return {}; }
  void apply(State& s, std::uint64_t p, unsigned, std::uint64_t) const {
    ++s.distinct;
    s.prime = p;
  }
  Out finish(const State& s, std::uint64_t) const {
    return s.distinct == 1 ? std::log(static_cast<double>(s.prime)) : 0.0;
  }
};

// Upsilon(n) = log n on Omega(n) = 2, else 0. Swap this policy to change
// the definition of the master function.
struct UpsilonPolicy {
  using State = unsigned;
  using Out = double;
  State init() const { return 0; }
  void apply(State& s, std::uint64_t, unsigned k, std::uint64_t) const { s += k; }
  Out finish(const State& s, std::uint64_t n) const { return s == 2 ? std::log(static_cast<double>(n)) : 0.0; }
};

template <class Policy>
void sieve_segment(const Policy& policy, std::span<const std::uint64_t> base_primes, std::uint64_t lo,
                   std::uint64_t hi, std::span<typename Policy::Out> out) {
  const std::uint64_t len = hi - lo + 1;
  std::vector<std::uint64_t> rem(len);
  std::vector<typename Policy::State> state(len, policy.init());
  for (std::uint64_t i = 0; i < len; ++i) rem[i] = lo + i;

  for (std::uint64_t p : base_primes) {
    if (p * p > hi) break;
    for (std::uint64_t m = ((lo + p - 1) / p) * p; m <= hi; m += p) {
      const std::uint64_t i = m - lo;
      unsigned k = 0;
      std::uint64_t pk = 1;
      while (rem[i] % p == 0) {
        rem[i] /= p;
        pk *= p;
        ++k;
      }
      policy.apply(state[i], p, k, pk);
    }
  }
  for (std::uint64_t i = 0; i < len; ++i) {
    if (rem[i] > 1) policy.apply(state[i], rem[i], 1, rem[i]);
    out[i] = policy.finish(state[i], lo + i);
  }
}

template <class Policy>
std::vector<typename Policy::Out> run_sieve(const Policy& policy, std::uint64_t extent, const BuildOptions& options) {
  if (options.segment_size == 0) throw InvalidArgument("segment size must be >= 1");
  std::vector<typename Policy::Out> out(extent);
  const auto base = primes_up_to(isqrt(extent));
  const std::uint64_t segments = (extent + options.segment_size - 1) / options.segment_size;
  parallel_for(segments, options.threads, [&](std::size_t s) {
    const std::uint64_t lo = 1 + s * options.segment_size;
    const std::uint64_t hi = std::min(extent, lo + options.segment_size - 1);
    sieve_segment(policy, base, lo, hi, std::span(out).subspan(lo - 1, hi - lo + 1));
  });
  return out;
}

std::vector<double> to_floating(const std::vector<std::int64_t>& v) {
  return std::vector<double>(v.begin(), v.end());
}

}  // namespace

FunctionTable build_table(const FunctionKind& kind, std::uint64_t limit, std::uint64_t shift_headroom,
                          const BuildOptions& options) {
  if (limit == 0) throw InvalidArgument("build_table: limit must be >= 1");
  const PayloadMode mode = options.mode.value_or(kind.natural_mode());
  if (mode == PayloadMode::Exact && !kind.is_integer_valued()) {
    throw InvalidArgument("build_table: exact payload not available for real-valued kind " + kind.name());
  }
  const std::uint64_t extent = limit + shift_headroom;

  std::vector<std::int64_t> ints;
  switch (kind.tag()) {
    case FunctionKind::Tag::VonMangoldt:
      return FunctionTable::from_floating(kind, limit, run_sieve(VonMangoldtPolicy{}, extent, options));
    case FunctionKind::Tag::MasterUpsilon:
      return FunctionTable::from_floating(kind, limit, run_sieve(UpsilonPolicy{}, extent, options));
    case FunctionKind::Tag::Divisor:
      ints = run_sieve(DivisorPolicy{kind.divisor_order()}, extent, options);
      break;
    case FunctionKind::Tag::EulerPhi:
      ints = run_sieve(PhiPolicy{}, extent, options);
      break;
    case FunctionKind::Tag::MuSquared:
      ints = run_sieve(MuSquaredPolicy{}, extent, options);
      break;
    case FunctionKind::Tag::Liouville:
      ints = run_sieve(LiouvillePolicy{}, extent, options);
      break;
    case FunctionKind::Tag::BigOmega:
      ints = run_sieve(BigOmegaPolicy{}, extent, options);
      break;
    case FunctionKind::Tag::ConstantOne:
      ints.assign(extent, 1);
      break;
    case FunctionKind::Tag::Custom:
      throw UnsupportedKind("build_table: custom kind '" + kind.custom_name() +
                            "' has no sieve; use FunctionTable::from_exact/from_floating");
  }
  if (mode == PayloadMode::Floating) return FunctionTable::from_floating(kind, limit, to_floating(ints));
  return FunctionTable::from_exact(kind, limit, std::move(ints));
}

// ---------------------------------------------------------------------------
// PrefixSums

PrefixSums::PrefixSums(const FunctionTable& table) : kind_(table.kind()), limit_(table.limit()) {
  if (table.mode() == PayloadMode::Exact) {
    const auto f = table.exact_values();
    std::vector<exact_int> s(limit_ + 1, 0);
    for (std::uint64_t n = 1; n <= limit_; ++n) s[n] = s[n - 1] + f[n - 1];
    sums_ = std::move(s);
  } else {
    const auto f = table.real_values();
    std::vector<double> s(limit_ + 1, 0.0);
    CompensatedSum acc;
    for (std::uint64_t n = 1; n <= limit_; ++n) {
      acc.add(f[n - 1]);
      s[n] = acc.value();
    }
    sums_ = std::move(s);
  }
}

exact_int PrefixSums::exact(std::uint64_t n) const {
  const auto* s = std::get_if<std::vector<exact_int>>(&sums_);
  if (s == nullptr) throw InvalidArgument("prefix sums of " + kind_.name() + " are floating");
  if (n > limit_) throw RangeError("prefix sum index " + std::to_string(n) + " exceeds limit " + std::to_string(limit_));
  return (*s)[n];
}

double PrefixSums::real(std::uint64_t n) const {
  if (n > limit_) throw RangeError("prefix sum index " + std::to_string(n) + " exceeds limit " + std::to_string(limit_));
  return std::visit([n](const auto& s) { return static_cast<double>(s[n]); }, sums_);
}

Value PrefixSums::at(std::uint64_t n) const {
  return mode() == PayloadMode::Exact ? Value::exact(exact(n)) : Value::floating(real(n));
}

// ---------------------------------------------------------------------------

double mean_value_reference(const FunctionKind& kind, std::uint64_t x) {
  if (x < 3) throw InvalidArgument("mean_value_reference: x must be >= 3");
  const double xd = static_cast<double>(x);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  switch (kind.tag()) {
    case FunctionKind::Tag::VonMangoldt:
    case FunctionKind::Tag::ConstantOne:
      return xd;
    case FunctionKind::Tag::Divisor: {
      const unsigned l = kind.divisor_order();
      return xd * std::pow(std::log(xd), l - 1) / std::tgamma(static_cast<double>(l));
    }
    case FunctionKind::Tag::EulerPhi:
      return 3.0 / pi2 * xd * xd;
    case FunctionKind::Tag::MuSquared:
      return 6.0 / pi2 * xd;
    case FunctionKind::Tag::MasterUpsilon:
      return xd * std::log(std::log(xd));
    case FunctionKind::Tag::Liouville:
    case FunctionKind::Tag::BigOmega:
    case FunctionKind::Tag::Custom:
      break;
  }
  throw UnsupportedKind("mean_value_reference: no mean value for kind " + kind.name());
}

void write_table_csv(const FunctionTable& table, std::ostream& out) {
  out << "n,value\n";
  for (std::uint64_t n = 1; n <= table.extent(); ++n) out << n << ',' << to_string(table.at(n)) << '\n';
}

}  // namespace arealab
