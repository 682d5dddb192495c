#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arealab {

/// A split of {1..n} into halves A and B, n even. Bit i of the membership
/// string is '1' iff i+1 is in A.
class Splitting {
 public:
  /// `members_of_a` must hold exactly n/2 distinct values in 1..n.
  static Splitting from_members(std::uint32_t n, const std::vector<std::uint32_t>& members_of_a);
  static Splitting from_bits(std::string_view bits);

  std::uint32_t n() const { return static_cast<std::uint32_t>(in_a_.size()); }
  bool in_a(std::uint32_t element) const { return in_a_.at(element - 1) != 0; }
  std::vector<std::uint32_t> a_members() const;
  std::vector<std::uint32_t> b_members() const;

  /// Same split with the roles of A and B exchanged.
  Splitting swapped() const;
  /// Membership string, e.g. "1001" for A = {1, 4}.
  std::string bits() const;

  friend bool operator==(const Splitting&, const Splitting&) = default;

 private:
  explicit Splitting(std::vector<std::uint8_t> in_a) : in_a_(std::move(in_a)) {}
  std::vector<std::uint8_t> in_a_;
};

/// M_k = #{(a, b) in A x B : a - b = k} for -n <= k <= n.
struct DifferenceHistogram {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> counts;  ///< counts[k + n]
  std::uint64_t max_value = 0;
  std::vector<int> argmax;            ///< every k attaining max_value, ascending

  std::uint64_t at(int k) const;
  std::uint64_t total() const;
};

DifferenceHistogram difference_histogram(const Splitting& s);

/// The indicator of A u B = {1..n}: 1 for 1 <= c <= n, else 0.
std::uint32_t membership_indicator(const Splitting& s, std::int64_t c);

/// sum_{a in A} ind(a) ind(a + k): counts a in A with a + k still in 1..n.
/// This is the literal indicator correlation, not M_k.
std::uint64_t indicator_correlation(const Splitting& s, std::int64_t k);

struct OverlapResult {
  enum class Method { Exhaustive, Heuristic };

  std::uint32_t n = 0;
  std::uint64_t value = 0;  ///< max_k M_k of the witness
  Splitting witness = Splitting::from_bits("10");
  Method method = Method::Exhaustive;
  std::uint64_t budget = 0;  ///< heuristic only
  std::uint64_t seed = 0;    ///< heuristic only

  /// "exhaustive" or "heuristic:budget=<b>;seed=<s>".
  std::string method_label() const;
};

inline constexpr std::uint32_t kDefaultExhaustiveCap = 24;
inline constexpr std::uint64_t kDefaultAnnealingBudget = 100'000;

/// Optimal M(n) by exhaustive search with 1 fixed in A and the reversal
/// symmetry folded out. Witness: lexicographically smallest membership
/// string among optimal splittings with 1 in A. CapExceeded for n > cap.
OverlapResult exact_min_overlap(std::uint32_t n, std::uint32_t cap = kDefaultExhaustiveCap, unsigned threads = 0);

/// Simulated annealing over swap moves (exchange one element of A with one
/// of B). Deterministic for a fixed (n, budget, seed). The value is an upper
/// bound on M(n).
OverlapResult heuristic_min_overlap(std::uint32_t n, std::uint64_t budget = kDefaultAnnealingBudget,
                                    std::uint64_t seed = 0);

struct BoundRow {
  enum class Direction { Lower, Upper };
  enum class Status { Evaluated, SmallNExempt, ShapeOnly };

  std::string name;
  std::string formula;
  Direction direction = Direction::Lower;
  double value = 0.0;  ///< bound evaluated at n
  Status status = Status::Evaluated;
  /// Whether the result's M satisfies the inequality. Meaningful for
  /// Evaluated rows; still filled in for the others.
  bool satisfied = false;
  std::string note;

  /// CSV cell: "true", "false", "exempt" or "shape-only".
  std::string ok_label() const;
};

/// Rows below this n with an o(1) factor are reported as small-n exempt.
inline constexpr std::uint32_t kAsymptoticRowsFromN = 32;

/// Every published bound on M(n) evaluated against `result`.
std::vector<BoundRow> bounds_table(const OverlapResult& result);

}  // namespace arealab
