#include "arealab/value.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "arealab/errors.hpp"

namespace arealab {

std::string_view to_string(PayloadMode mode) {
  return mode == PayloadMode::Exact ? "exact" : "floating";
}

exact_int Value::as_exact() const {
  if (const auto* v = std::get_if<exact_int>(&repr_)) return *v;
  throw InvalidArgument("value is floating, not exact");
}

double Value::as_double() const {
  if (const auto* v = std::get_if<exact_int>(&repr_)) return static_cast<double>(*v);
  return std::get<double>(repr_);
}

long double Value::as_long_double() const {
  if (const auto* v = std::get_if<exact_int>(&repr_)) return static_cast<long double>(*v);
  return std::get<double>(repr_);
}

bool Value::is_zero() const { return sign() == 0; }

int Value::sign() const {
  if (const auto* v = std::get_if<exact_int>(&repr_)) return (*v > 0) - (*v < 0);
  const double d = std::get<double>(repr_);
  return (d > 0) - (d < 0);
}

std::string to_string(exact_int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work in the unsigned domain so the most negative value survives.
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_string(const Value& v) {
  return v.is_exact() ? to_string(v.as_exact()) : format_double(v.as_double());
}

exact_int parse_exact_int(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  std::size_t i = 0;
  const bool negative = text[0] == '-';
  if (negative || text[0] == '+') ++i;
  if (i == text.size()) throw InvalidArgument("malformed integer literal '" + std::string(text) + "'");
  unsigned __int128 u = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw InvalidArgument("malformed integer literal '" + std::string(text) + "'");
    u = u * 10 + static_cast<unsigned>(c - '0');
  }
  return negative ? -static_cast<exact_int>(u) : static_cast<exact_int>(u);
}

Value parse_value(std::string_view text) {
  const bool integral = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '-' || c == '+';
  });
  if (integral) return Value::exact(parse_exact_int(text));
  const std::string owned(text);
  char* end = nullptr;
  const double d = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size()) {
    throw InvalidArgument("malformed numeric literal '" + owned + "'");
  }
  return Value::floating(d);
}

bool values_match(const Value& a, const Value& b, double tolerance) {
  if (a.is_exact() && b.is_exact()) return a.as_exact() == b.as_exact();
  const long double x = a.as_long_double();
  const long double y = b.as_long_double();
  const long double scale = std::max({1.0L, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= static_cast<long double>(tolerance) * scale;
}

}  // namespace arealab
