#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace arealab {

/// Accumulator type for integer-valued kinds. Products of two table entries
/// and sums of up to ~10^8 of them stay far inside its range.
using exact_int = __int128;

enum class PayloadMode { Exact, Floating };

std::string_view to_string(PayloadMode mode);

/// A scalar produced by a table operation: an exact integer for
/// integer-valued kinds, a double otherwise.
class Value {
 public:
  Value() : repr_(exact_int{0}) {}
  static Value exact(exact_int v) { return Value(v); }
  static Value floating(double v) { return Value(v); }

  PayloadMode mode() const {
    return std::holds_alternative<exact_int>(repr_) ? PayloadMode::Exact : PayloadMode::Floating;
  }
  bool is_exact() const { return mode() == PayloadMode::Exact; }

  /// Throws InvalidArgument on a floating value.
  exact_int as_exact() const;
  double as_double() const;
  long double as_long_double() const;

  bool is_zero() const;
  int sign() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  explicit Value(exact_int v) : repr_(v) {}
  explicit Value(double v) : repr_(v) {}
  std::variant<exact_int, double> repr_;
};

/// Exact values verbatim, floating values with 17 significant digits.
std::string to_string(const Value& v);
std::string to_string(exact_int v);
std::string format_double(double v);

/// Parses what `to_string(Value)` produced; integers come back Exact.
Value parse_value(std::string_view text);
exact_int parse_exact_int(std::string_view text);

/// |a - b| <= tolerance * max(1, |a|, |b|), or exact equality when both are
/// exact.
bool values_match(const Value& a, const Value& b, double tolerance);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (sum_ >= v ? (sum_ >= -v) : (v >= -sum_)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace arealab
