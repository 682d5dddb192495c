#include "arealab/area_identity.hpp"

#include <cmath>

#include "arealab/errors.hpp"
#include "arealab/parallel.hpp"

namespace arealab {

template <class T>
SequencePair<T>::SequencePair(std::vector<T> r_in, std::vector<T> h_in) : r(std::move(r_in)), h(std::move(h_in)) {
  if (r.empty()) throw InvalidArgument("sequence pair must have n >= 1");
  if (r.size() != h.size()) {
    throw InvalidArgument("sequence lengths differ: " + std::to_string(r.size()) + " vs " + std::to_string(h.size()));
  }
  if constexpr (std::is_floating_point_v<T>) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!std::isfinite(r[i]) || !std::isfinite(h[i])) throw InvalidArgument("sequence values must be finite");
    }
  }
}

template struct SequencePair<std::int64_t>;
template struct SequencePair<double>;

namespace {

// Widened scalar and accumulator per payload type.
template <class T>
struct Arith;

template <>
struct Arith<std::int64_t> {
  using Wide = exact_int;
  struct Acc {
    exact_int sum = 0;
    void add(exact_int v) { sum += v; }
    void add(const Acc& o) { sum += o.sum; }
    Value value() const { return Value::exact(sum); }
  };
};

template <>
struct Arith<double> {
  using Wide = double;
  struct Acc {
    CompensatedSum sum;
    void add(double v) { sum.add(v); }
    void add(const Acc& o) { sum.add(o.sum); }
    Value value() const { return Value::floating(sum.value()); }
  };
};

template <class T>
std::pair<Value, Value> sequence_sides(const SequencePair<T>& p) {
  using W = typename Arith<T>::Wide;
  using Acc = typename Arith<T>::Acc;
  const std::size_t n = p.size();

  Acc lhs;
  for (std::size_t j = 1; j < n; ++j) lhs.add(W(p.r[j]) * W(p.h[j]));

  // First term: running prefix R over r.
  Acc trapezoids;
  W prefix = W(p.r[0]);
  for (std::size_t j = 1; j < n; ++j) {
    const W prev = prefix;
    prefix += W(p.r[j]);
    trapezoids.add(W(p.h[j]) * (prefix + prev));
  }
  // Second term: suffix sums of h.
  Acc staircase;
  W suffix = 0;
  for (std::size_t j = n - 1; j-- > 0;) {
    suffix += W(p.h[j + 1]);
    staircase.add(W(p.r[j]) * suffix);
  }

  Acc rhs = trapezoids;
  if constexpr (std::is_same_v<T, std::int64_t>) {
    rhs.add(-2 * staircase.sum);
  } else {
    rhs.add(-2.0 * staircase.sum.value());
  }
  return {lhs.value(), rhs.value()};
}

IdentityCheckResult make_result(Value lhs, Value rhs, double tolerance) {
  IdentityCheckResult out;
  out.mode = (lhs.is_exact() && rhs.is_exact()) ? PayloadMode::Exact : PayloadMode::Floating;
  out.tolerance = out.mode == PayloadMode::Exact ? 0.0 : tolerance;
  out.equal = values_match(lhs, rhs, out.tolerance);
  out.lhs = lhs;
  out.rhs = rhs;
  return out;
}

void require_positive_x(std::uint64_t x, const char* what) {
  if (x == 0) throw InvalidArgument(std::string(what) + ": x must be >= 1");
}

template <class T>
Value bilinear_impl(std::span<const T> f, std::uint64_t x) {
  using W = typename Arith<T>::Wide;
  typename Arith<T>::Acc acc;
  if constexpr (std::is_same_v<T, std::int64_t>) {
    exact_int prefix = x >= 1 ? f[0] : 0;
    for (std::uint64_t n = 2; n <= x; ++n) {
      acc.add(W(f[n - 1]) * prefix);
      prefix += f[n - 1];
    }
  } else {
    CompensatedSum prefix;
    if (x >= 1) prefix.add(f[0]);
    for (std::uint64_t n = 2; n <= x; ++n) {
      acc.add(f[n - 1] * prefix.value());
      prefix.add(f[n - 1]);
    }
  }
  return acc.value();
}

template <class T>
Value oracle_impl(std::span<const T> f, std::uint64_t x, unsigned threads) {
  using W = typename Arith<T>::Wide;
  using Acc = typename Arith<T>::Acc;
  // Fixed-size blocks of outer index n, reduced in block order: the result
  // does not depend on how many workers ran.
  constexpr std::uint64_t kBlock = 256;
  const std::uint64_t outer = x >= 1 ? x - 1 : 0;
  const std::uint64_t blocks = (outer + kBlock - 1) / kBlock;
  auto partial = parallel_map<Acc>(blocks, threads, [&](std::size_t b) {
    Acc acc;
    const std::uint64_t first = 1 + b * kBlock;
    const std::uint64_t last = std::min(outer, first + kBlock - 1);
    for (std::uint64_t n = first; n <= last; ++n) {
      const W fn = W(f[n - 1]);
      for (std::uint64_t j = 1; j <= x - n; ++j) acc.add(fn * W(f[n + j - 1]));
    }
    return acc;
  });
  Acc total;
  for (const auto& p : partial) total.add(p);
  return total.value();
}

template <class T>
Value closed_form_impl(std::span<const T> f, std::uint64_t x) {
  using W = typename Arith<T>::Wide;
  if constexpr (std::is_same_v<T, std::int64_t>) {
    exact_int sum = 0;
    exact_int squares = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
      sum += f[n - 1];
      squares += W(f[n - 1]) * W(f[n - 1]);
    }
    // (sum^2 - squares) = 2 * sum_{m<n} f(m) f(n), always even.
    return Value::exact((sum * sum - squares) / 2);
  } else {
    CompensatedSum sum;
    CompensatedSum squares;
    for (std::uint64_t n = 1; n <= x; ++n) {
      sum.add(f[n - 1]);
      squares.add(f[n - 1] * f[n - 1]);
    }
    const long double s = sum.value();
    return Value::floating(static_cast<double>((s * s - squares.value()) / 2.0L));
  }
}

}  // namespace

IdentityCheckResult general_area_identity(const IntegerSequencePair& pair) {
  auto [lhs, rhs] = sequence_sides(pair);
  return make_result(lhs, rhs, 0.0);
}

IdentityCheckResult general_area_identity(const RealSequencePair& pair, double tolerance) {
  if (!(tolerance > 0)) throw InvalidArgument("tolerance must be positive");
  auto [lhs, rhs] = sequence_sides(pair);
  return make_result(lhs, rhs, tolerance);
}

Value bilinear_rhs(const FunctionTable& table, std::uint64_t x) {
  require_positive_x(x, "bilinear_rhs");
  table.require_limit(x, "bilinear_rhs");
  return table.visit([x](auto f) { return bilinear_impl(f, x); });
}

Value double_sum_lhs_oracle(const FunctionTable& table, std::uint64_t x, std::uint64_t oracle_cap,
                            unsigned threads) {
  require_positive_x(x, "double_sum_lhs_oracle");
  table.require_limit(x, "double_sum_lhs_oracle");
  if (x > oracle_cap) {
    throw BudgetExceeded("double_sum_lhs_oracle: x = " + std::to_string(x) + " above oracle cap " +
                         std::to_string(oracle_cap));
  }
  return table.visit([x, threads](auto f) { return oracle_impl(f, x, threads); });
}

Value pair_sum_closed_form(const FunctionTable& table, std::uint64_t x) {
  require_positive_x(x, "pair_sum_closed_form");
  table.require_limit(x, "pair_sum_closed_form");
  return table.visit([x](auto f) { return closed_form_impl(f, x); });
}

IdentityCheckResult identity_check(const FunctionTable& table, std::uint64_t x, double tolerance,
                                   std::uint64_t oracle_cap) {
  if (!(tolerance > 0)) throw InvalidArgument("tolerance must be positive");
  return make_result(double_sum_lhs_oracle(table, x, oracle_cap), bilinear_rhs(table, x), tolerance);
}

}  // namespace arealab
