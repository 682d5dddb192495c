#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "arealab/function_kind.hpp"
#include "arealab/value.hpp"

namespace arealab {

/// Dense table of f(1..limit + shift_headroom). Immutable once built.
///
/// Entries past `limit` exist only so shifted correlations can read
/// f(n + l); every accessor is 1-based and throws RangeError past the
/// extent instead of returning zero.
class FunctionTable {
 public:
  static FunctionTable from_exact(FunctionKind kind, std::uint64_t limit, std::vector<std::int64_t> values);
  static FunctionTable from_floating(FunctionKind kind, std::uint64_t limit, std::vector<double> values);

  const FunctionKind& kind() const { return kind_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t shift_headroom() const { return extent() - limit_; }
  std::uint64_t extent() const;
  PayloadMode mode() const {
    return std::holds_alternative<std::vector<std::int64_t>>(payload_) ? PayloadMode::Exact
                                                                      : PayloadMode::Floating;
  }

  std::int64_t exact(std::uint64_t n) const;
  double real(std::uint64_t n) const;
  Value at(std::uint64_t n) const;

  /// Element i holds f(i + 1).
  std::span<const std::int64_t> exact_values() const;
  std::span<const double> real_values() const;

  /// Throws RangeError naming `what` unless 1..last is readable.
  void require_extent(std::uint64_t last, const char* what) const;
  /// Throws RangeError unless 1..last lies within 1..limit.
  void require_limit(std::uint64_t last, const char* what) const;

  /// Calls fn with the payload span (int64 or double).
  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit([&](const auto& v) -> decltype(auto) {
      using T = typename std::decay_t<decltype(v)>::value_type;
      return fn(std::span<const T>(v));
    }, payload_);
  }

 private:
  FunctionTable(FunctionKind kind, std::uint64_t limit, std::variant<std::vector<std::int64_t>, std::vector<double>> payload);

  FunctionKind kind_;
  std::uint64_t limit_;
  std::variant<std::vector<std::int64_t>, std::vector<double>> payload_;
};

struct BuildOptions {
  /// Defaults to the kind's natural mode. Exact is rejected for the
  /// real-valued kinds.
  std::optional<PayloadMode> mode;
  /// Entries per sieve segment; tables larger than this are sieved in
  /// independent segments.
  std::uint64_t segment_size = std::uint64_t{1} << 26;
  /// 0 means default_threads().
  unsigned threads = 0;
};

FunctionTable build_table(const FunctionKind& kind, std::uint64_t limit, std::uint64_t shift_headroom = 0,
                          const BuildOptions& options = {});

/// S(0..limit), S(0) = 0, in the source table's payload mode. Floating mode
/// uses compensated accumulation.
class PrefixSums {
 public:
  explicit PrefixSums(const FunctionTable& table);

  const FunctionKind& kind() const { return kind_; }
  std::uint64_t limit() const { return limit_; }
  PayloadMode mode() const {
    return std::holds_alternative<std::vector<exact_int>>(sums_) ? PayloadMode::Exact : PayloadMode::Floating;
  }

  Value at(std::uint64_t n) const;
  exact_int exact(std::uint64_t n) const;
  double real(std::uint64_t n) const;

 private:
  FunctionKind kind_;
  std::uint64_t limit_;
  std::variant<std::vector<exact_int>, std::vector<double>> sums_;
};

inline PrefixSums prefix_sums(const FunctionTable& table) { return PrefixSums(table); }

/// Leading term of sum_{n<=x} f(n): x for Lambda and 1, x log x for d,
/// x log^{l-1} x / (l-1)! for d_l, (3/pi^2) x^2 for phi, (6/pi^2) x for
/// mu^2, x log log x for Upsilon. Throws UnsupportedKind for Liouville,
/// BigOmega and Custom; InvalidArgument for x < 3.
double mean_value_reference(const FunctionKind& kind, std::uint64_t x);

/// CSV dump with header `n,value`, one row per stored index.
void write_table_csv(const FunctionTable& table, std::ostream& out);

/// Primes up to `bound` by a plain sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace arealab
