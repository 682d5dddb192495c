#include "arealab/minoverlap.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "arealab/errors.hpp"
#include "arealab/parallel.hpp"

namespace arealab {

namespace {

void require_even(std::uint32_t n, const char* what) {
  if (n == 0 || n % 2 != 0) throw InvalidArgument(std::string(what) + ": n must be a positive even integer, got " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// Splitting

Splitting Splitting::from_members(std::uint32_t n, const std::vector<std::uint32_t>& members_of_a) {
  require_even(n, "Splitting");
  std::vector<std::uint8_t> in_a(n, 0);
  for (std::uint32_t a : members_of_a) {
    if (a < 1 || a > n) throw InvalidArgument("Splitting: element " + std::to_string(a) + " outside 1.." + std::to_string(n));
    if (in_a[a - 1]) throw InvalidArgument("Splitting: duplicate element " + std::to_string(a));
    in_a[a - 1] = 1;
  }
  if (members_of_a.size() != n / 2) throw InvalidArgument("Splitting: A must hold exactly n/2 elements");
  return Splitting(std::move(in_a));
}

Splitting Splitting::from_bits(std::string_view bits) {
  std::vector<std::uint32_t> members;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      members.push_back(static_cast<std::uint32_t>(i + 1));
    } else if (bits[i] != '0') {
      throw InvalidArgument("Splitting: membership string must be 0/1, got '" + std::string(bits) + "'");
    }
  }
  return from_members(static_cast<std::uint32_t>(bits.size()), members);
}

std::vector<std::uint32_t> Splitting::a_members() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n(); ++i) {
    if (in_a_[i]) out.push_back(i + 1);
  }
  return out;
}

std::vector<std::uint32_t> Splitting::b_members() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n(); ++i) {
    if (!in_a_[i]) out.push_back(i + 1);
  }
  return out;
}

Splitting Splitting::swapped() const {
  auto flipped = in_a_;
  for (auto& b : flipped) b = b ? 0 : 1;
  return Splitting(std::move(flipped));
}

std::string Splitting::bits() const {
  std::string out(n(), '0');
  for (std::uint32_t i = 0; i < n(); ++i) {
    if (in_a_[i]) out[i] = '1';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Histogram

std::uint64_t DifferenceHistogram::at(int k) const {
  if (k < -static_cast<int>(n) || k > static_cast<int>(n)) return 0;
  return counts[static_cast<std::size_t>(k + static_cast<int>(n))];
}

std::uint64_t DifferenceHistogram::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

DifferenceHistogram difference_histogram(const Splitting& s) {
  DifferenceHistogram h;
  h.n = s.n();
  h.counts.assign(2 * static_cast<std::size_t>(h.n) + 1, 0);
  const auto a = s.a_members();
  const auto b = s.b_members();
  for (auto ai : a) {
    for (auto bj : b) ++h.counts[static_cast<std::size_t>(static_cast<std::int64_t>(ai) - bj + h.n)];
  }
  h.max_value = *std::max_element(h.counts.begin(), h.counts.end());
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    if (h.counts[i] == h.max_value) h.argmax.push_back(static_cast<int>(i) - static_cast<int>(h.n));
  }
  return h;
}

std::uint32_t membership_indicator(const Splitting& s, std::int64_t c) {
  return (c >= 1 && c <= static_cast<std::int64_t>(s.n())) ? 1 : 0;
}

std::uint64_t indicator_correlation(const Splitting& s, std::int64_t k) {
  std::uint64_t count = 0;
  for (auto a : s.a_members()) count += membership_indicator(s, a) * membership_indicator(s, a + k);
  return count;
}

std::string OverlapResult::method_label() const {
  if (method == Method::Exhaustive) return "exhaustive";
  return "heuristic:budget=" + std::to_string(budget) + ";seed=" + std::to_string(seed);
}

// ---------------------------------------------------------------------------
// Exhaustive search on bitmasks: bit i-1 stands for element i.

namespace {

std::uint64_t reverse_bits(std::uint64_t mask, std::uint32_t n) {
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (mask >> i & 1) out |= std::uint64_t{1} << (n - 1 - i);
  }
  return out;
}

// Lexicographic key of the membership string (element 1 first).
std::uint64_t lex_key(std::uint64_t mask, std::uint32_t n) { return reverse_bits(mask, n); }

// max_k M_k, giving up early once it exceeds `stop_above`.
std::uint64_t mask_max_overlap(std::uint64_t a, std::uint64_t b, std::uint32_t n, std::uint64_t stop_above) {
  std::uint64_t best = 0;
  for (std::uint32_t k = 1; k < n; ++k) {
    const auto pos = static_cast<std::uint64_t>(std::popcount(a & (b << k)));  // a - b = k
    const auto neg = static_cast<std::uint64_t>(std::popcount(b & (a << k)));  // a - b = -k
    best = std::max({best, pos, neg});
    if (best > stop_above) return best;
  }
  return best;
}

struct Best {
  std::uint64_t value = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t key = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t mask = 0;

  void offer(std::uint64_t v, std::uint64_t k, std::uint64_t m) {
    if (v < value || (v == value && k < key)) {
      value = v;
      key = k;
      mask = m;
    }
  }
};

// Gosper's hack over all `width`-bit words with `ones` bits set.
template <class Fn>
void for_each_combination(std::uint32_t width, std::uint32_t ones, Fn&& fn) {
  if (ones > width) return;
  if (ones == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << width;
  std::uint64_t c = (std::uint64_t{1} << ones) - 1;
  while (c < limit) {
    fn(c);
    const std::uint64_t lowest = c & (~c + 1);
    const std::uint64_t ripple = c + lowest;
    c = (((ripple ^ c) >> 2) / lowest) | ripple;
  }
}

Splitting mask_to_splitting(std::uint64_t mask, std::uint32_t n) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (mask >> i & 1) members.push_back(i + 1);
  }
  return Splitting::from_members(n, members);
}

}  // namespace

OverlapResult exact_min_overlap(std::uint32_t n, std::uint32_t cap, unsigned threads) {
  require_even(n, "exact_min_overlap");
  if (n > cap) throw CapExceeded("exact_min_overlap: n = " + std::to_string(n) + " above cap " + std::to_string(cap));
  if (n > 62) throw CapExceeded("exact_min_overlap: n = " + std::to_string(n) + " above bitmask limit 62");

  const std::uint32_t half = n / 2;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  auto consider = [&](Best& best, std::uint64_t a) {
    // Reversal (k -> -k) maps this split to one whose partner in the
    // 1-in-A normal form is either rev(a) or its complement.
    const std::uint64_t rev = reverse_bits(a, n);
    const std::uint64_t partner = (rev & 1) ? rev : (full ^ rev);
    const std::uint64_t key = lex_key(a, n);
    if (lex_key(partner, n) < key) return;
    const std::uint64_t v = mask_max_overlap(a, full ^ a, n, best.value);
    if (v <= best.value) best.offer(v, key, a);
  };

  Best overall;
  if (half == 1) {
    consider(overall, 1);
  } else {
    // Branch on the second-smallest element s of A (the smallest is 1).
    const std::uint32_t branches = n - half + 1;  // s = 2 .. n - half + 2
    const auto partial = parallel_map<Best>(branches, threads, [&](std::size_t b) {
      Best best;
      const std::uint32_t s = static_cast<std::uint32_t>(b) + 2;
      const std::uint64_t head = 1 | (std::uint64_t{1} << (s - 1));
      for_each_combination(n - s, half - 2, [&](std::uint64_t tail) { consider(best, head | (tail << s)); });
      return best;
    });
    for (const auto& p : partial) overall.offer(p.value, p.key, p.mask);
  }

  OverlapResult out;
  out.n = n;
  out.value = overall.value;
  out.witness = mask_to_splitting(overall.mask, n);
  out.method = OverlapResult::Method::Exhaustive;
  return out;
}

// ---------------------------------------------------------------------------
// Simulated annealing

namespace {

class AnnealState {
 public:
  AnnealState(std::uint32_t n, std::mt19937_64& rng) : n_(n), in_a_(n, 0), counts_(2 * n + 1, 0) {
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i + 1;
    for (std::uint32_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform(rng, i)]);
    a_.assign(perm.begin(), perm.begin() + n / 2);
    b_.assign(perm.begin() + n / 2, perm.end());
    for (auto x : a_) in_a_[x - 1] = 1;
    for (auto x : a_) {
      for (auto y : b_) ++count(static_cast<std::int64_t>(x) - y);
    }
  }

  static std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t bound) {
    return static_cast<std::uint32_t>(rng() % bound);
  }

  std::size_t half() const { return a_.size(); }

  // Exchange a_[i] and b_[j], updating the histogram in O(n).
  void swap(std::size_t i, std::size_t j) {
    const std::int64_t a = a_[i];
    const std::int64_t b = b_[j];
    for (auto y : b_) --count(a - y);
    for (auto x : a_) --count(x - b);
    ++count(a - b);
    a_[i] = static_cast<std::uint32_t>(b);
    b_[j] = static_cast<std::uint32_t>(a);
    in_a_[a - 1] = 0;
    in_a_[b - 1] = 1;
    for (auto y : b_) ++count(b - y);
    for (auto x : a_) ++count(x - a);
    --count(b - a);
  }

  // max_k M_k scaled so that fewer ties at the maximum rank lower.
  std::int64_t energy() const {
    std::int64_t best = 0;
    std::int64_t ties = 0;
    for (auto c : counts_) {
      if (c > best) {
        best = c;
        ties = 1;
      } else if (c == best) {
        ++ties;
      }
    }
    return best * (2 * static_cast<std::int64_t>(n_) + 2) + ties;
  }

  std::int64_t max_overlap() const { return *std::max_element(counts_.begin(), counts_.end()); }
  const std::vector<std::uint8_t>& membership() const { return in_a_; }

 private:
  std::int64_t& count(std::int64_t k) { return counts_[static_cast<std::size_t>(k + n_)]; }

  std::int64_t n_;
  std::vector<std::uint8_t> in_a_;
  std::vector<std::uint32_t> a_;
  std::vector<std::uint32_t> b_;
  std::vector<std::int64_t> counts_;
};

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

OverlapResult heuristic_min_overlap(std::uint32_t n, std::uint64_t budget, std::uint64_t seed) {
  require_even(n, "heuristic_min_overlap");
  if (budget == 0) throw InvalidArgument("heuristic_min_overlap: budget must be > 0");

  std::mt19937_64 rng(seed);
  AnnealState state(n, rng);
  const std::size_t half = state.half();

  auto best_membership = state.membership();
  std::int64_t energy = state.energy();
  std::int64_t best_energy = energy;

  if (half > 1) {
    // Warm-up: pick T0 so that the median uphill move is accepted with
    // probability 1/2.
    std::vector<std::int64_t> uphill;
    for (int s = 0; s < 200; ++s) {
      const std::size_t i = AnnealState::uniform(rng, static_cast<std::uint32_t>(half));
      const std::size_t j = AnnealState::uniform(rng, static_cast<std::uint32_t>(half));
      state.swap(i, j);
      const std::int64_t delta = state.energy() - energy;
      state.swap(i, j);
      if (delta > 0) uphill.push_back(delta);
    }
    double t0 = 1.0;
    if (!uphill.empty()) {
      std::nth_element(uphill.begin(), uphill.begin() + uphill.size() / 2, uphill.end());
      t0 = static_cast<double>(uphill[uphill.size() / 2]) / std::log(2.0);
    }
    constexpr double kFinalTemperature = 0.05;
    const double cooling = t0 > kFinalTemperature
                               ? std::pow(kFinalTemperature / t0, 1.0 / static_cast<double>(budget))
                               : 1.0;

    double temperature = t0;
    for (std::uint64_t step = 0; step < budget; ++step, temperature *= cooling) {
      const std::size_t i = AnnealState::uniform(rng, static_cast<std::uint32_t>(half));
      const std::size_t j = AnnealState::uniform(rng, static_cast<std::uint32_t>(half));
      state.swap(i, j);
      const std::int64_t next = state.energy();
      const std::int64_t delta = next - energy;
      if (delta <= 0 || unit_uniform(rng) < std::exp(-static_cast<double>(delta) / temperature)) {
        energy = next;
        if (energy < best_energy) {
          best_energy = energy;
          best_membership = state.membership();
        }
      } else {
        state.swap(i, j);
      }
    }
  }

  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (best_membership[i]) members.push_back(i + 1);
  }
  Splitting witness = Splitting::from_members(n, members);
  if (!witness.in_a(1)) witness = witness.swapped();

  OverlapResult out;
  out.n = n;
  out.witness = witness;
  out.value = difference_histogram(witness).max_value;
  out.method = OverlapResult::Method::Heuristic;
  out.budget = budget;
  out.seed = seed;
  return out;
}

// ---------------------------------------------------------------------------

std::string BoundRow::ok_label() const {
  switch (status) {
    case Status::SmallNExempt: return "exempt";
    case Status::ShapeOnly: return "shape-only";
    case Status::Evaluated: break;
  }
  return satisfied ? "true" : "false";
}

std::vector<BoundRow> bounds_table(const OverlapResult& result) {
  const double n = result.n;
  const double m = static_cast<double>(result.value);
  const double sqrt_term = std::sqrt(4.0 - std::sqrt(15.0));
  const bool small_n = result.n < kAsymptoticRowsFromN;

  auto lower = [&](std::string name, std::string formula, double value) {
    BoundRow row{std::move(name), std::move(formula), BoundRow::Direction::Lower, value,
                 BoundRow::Status::Evaluated, m > value, {}};
    if (!row.satisfied) row.note = "not binding at this n";
    return row;
  };
  auto upper_asymptotic = [&](std::string name, std::string formula, double value) {
    BoundRow row{std::move(name), std::move(formula), BoundRow::Direction::Upper, value,
                 small_n ? BoundRow::Status::SmallNExempt : BoundRow::Status::Evaluated, m < value, {}};
    if (small_n) row.note = "asymptotic, small-n exempt";
    return row;
  };

  std::vector<BoundRow> rows;
  rows.push_back(lower("erdos-lower", "n/4", n / 4.0));
  rows.push_back(upper_asymptotic("erdos-upper", "(1+o(1))n/2", n / 2.0));
  rows.push_back(lower("lower-1-2^-1/2", "(1-2^{-1/2})n", (1.0 - 1.0 / std::sqrt(2.0)) * n));
  rows.push_back(lower("lower-sqrt(4-sqrt15)(n-1)", "sqrt(4-sqrt(15))(n-1)", sqrt_term * (n - 1.0)));
  rows.push_back(lower("lower-sqrt(4-sqrt15)n", "sqrt(4-sqrt(15))n", sqrt_term * n));
  rows.push_back(upper_asymptotic("upper-2n/5", "(1+o(1))2n/5", 2.0 * n / 5.0));
  rows.push_back(upper_asymptotic("upper-0.38093n", "(1+o(1))0.38093n", 0.38093 * n));
  BoundRow area{"area-D(k)n/4", "D(k)(1-o(1))n/4", BoundRow::Direction::Upper, n / 4.0,
                BoundRow::Status::ShapeOnly, m < n / 4.0,
                "D(k) > 1 is never constructed; value shown with D(k) = 1"};
  rows.push_back(std::move(area));

  // The published bounds count the size of each half, not of {1..n}. Record
  // how every row reads under that normalisation next to the literal one.
  const double half = n / 2.0;
  for (auto& row : rows) {
    const double scaled = row.value / 2.0;
    const bool ok = row.direction == BoundRow::Direction::Lower ? m > scaled : m < scaled;
    char buf[96];
    std::snprintf(buf, sizeof buf, "half-size m=%.0f: bound=%.12g holds=%s", half, scaled, ok ? "true" : "false");
    row.note = row.note.empty() ? std::string(buf) : row.note + "; " + buf;
  }
  return rows;
}

}  // namespace arealab
