#include "arealab/correlation.hpp"

#include "arealab/errors.hpp"
#include "arealab/parallel.hpp"

namespace arealab {

namespace {

struct ProductSum {
  Value value;
  std::uint64_t terms = 0;
};

// sum over n in [first, last] of f(n) f(partner(n)).
template <class T, class Partner>
ProductSum sum_products(std::span<const T> f, std::uint64_t first, std::uint64_t last, Partner partner) {
  ProductSum out;
  if constexpr (std::is_same_v<T, std::int64_t>) {
    exact_int acc = 0;
    for (std::uint64_t n = first; n <= last; ++n) {
      const exact_int p = exact_int(f[n - 1]) * f[partner(n) - 1];
      if (p != 0) ++out.terms;
      acc += p;
    }
    out.value = Value::exact(acc);
  } else {
    CompensatedSum acc;
    for (std::uint64_t n = first; n <= last; ++n) {
      const double p = f[n - 1] * f[partner(n) - 1];
      if (p != 0.0) ++out.terms;
      acc.add(p);
    }
    out.value = Value::floating(acc.value());
  }
  return out;
}

Value square(const FunctionTable& table, std::uint64_t n) {
  if (table.mode() == PayloadMode::Exact) {
    const exact_int v = table.exact(n);
    return Value::exact(v * v);
  }
  const double v = table.real(n);
  return Value::floating(v * v);
}

}  // namespace

CorrelationResult type1(const FunctionTable& table, std::uint64_t x, std::uint64_t shift) {
  if (x == 0) throw InvalidArgument("type1: x must be >= 1");
  if (shift == 0) throw InvalidArgument("type1: shift must be >= 1");
  table.require_extent(x + shift, ("type1 shift=" + std::to_string(shift)).c_str());
  const auto sum = table.visit([&](auto f) {
    return sum_products(f, 1, x, [shift](std::uint64_t n) { return n + shift; });
  });
  return CorrelationResult{table.kind(), x, shift, sum.value, sum.terms, std::nullopt};
}

CorrelationResult type2(const FunctionTable& table, std::uint64_t x) {
  if (x < 2) throw InvalidArgument("type2: x must be >= 2");
  table.require_limit(x, "type2");
  const std::uint64_t last = (x - 1) / 2;  // largest n with n < x/2
  const auto sum = table.visit([&](auto f) {
    return sum_products(f, 1, last, [x](std::uint64_t n) { return x - n; });
  });
  CorrelationResult out{table.kind(), x, std::nullopt, sum.value, sum.terms, std::nullopt};
  if (x % 2 == 0) out.middle_term = square(table, x / 2);
  return out;
}

std::vector<CorrelationResult> type1_sweep(const FunctionTable& table, std::uint64_t x,
                                           std::span<const std::uint64_t> shifts, unsigned threads) {
  for (std::uint64_t l : shifts) {
    if (l == 0) throw InvalidArgument("type1_sweep: shift must be >= 1");
    table.require_extent(x + l, ("type1_sweep shift=" + std::to_string(l)).c_str());
  }
  return parallel_map<CorrelationResult>(shifts.size(), threads,
                                         [&](std::size_t i) { return type1(table, x, shifts[i]); });
}

Value off_diagonal_sum(const FunctionTable& table, std::uint64_t x, std::uint64_t oracle_cap) {
  if (x == 0) throw InvalidArgument("off_diagonal_sum: x must be >= 1");
  table.require_limit(x, "off_diagonal_sum");
  if (x > oracle_cap) {
    throw BudgetExceeded("off_diagonal_sum: x = " + std::to_string(x) + " above oracle cap " +
                         std::to_string(oracle_cap));
  }
  return table.visit([x](auto f) -> Value {
    using T = typename decltype(f)::value_type;
    auto skip = [x](std::uint64_t n, std::uint64_t j) { return 2 * n < x && j == x - 2 * n; };
    if constexpr (std::is_same_v<T, std::int64_t>) {
      exact_int acc = 0;
      for (std::uint64_t n = 1; n < x; ++n) {
        for (std::uint64_t j = 1; j <= x - n; ++j) {
          if (!skip(n, j)) acc += exact_int(f[n - 1]) * f[n + j - 1];
        }
      }
      return Value::exact(acc);
    } else {
      CompensatedSum acc;
      for (std::uint64_t n = 1; n < x; ++n) {
        for (std::uint64_t j = 1; j <= x - n; ++j) {
          if (!skip(n, j)) acc.add(f[n - 1] * f[n + j - 1]);
        }
      }
      return Value::floating(acc.value());
    }
  });
}

double diagonal_ratio(const FunctionTable& table, std::uint64_t x) {
  const Value total = bilinear_rhs(table, x);
  if (total.is_zero()) {
    throw DegenerateSum("diagonal_ratio: double sum of " + table.kind().name() + " vanishes at x = " +
                        std::to_string(x));
  }
  const Value diag = type2(table, x).value;
  return static_cast<double>(1.0L - diag.as_long_double() / total.as_long_double());
}

}  // namespace arealab
