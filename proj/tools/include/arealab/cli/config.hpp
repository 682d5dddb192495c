#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arealab/function_kind.hpp"
#include "arealab/value.hpp"

namespace arealab::cli {

/// Everything a `report` run needs. The on-disk form is a flat
/// `key = value` file; lists are comma separated.
struct ExperimentConfig {
  std::vector<FunctionKind> kinds{FunctionKind::von_mangoldt()};
  std::vector<std::uint64_t> x_grid{1'000, 10'000, 100'000};
  std::vector<std::uint64_t> shifts{2};
  /// Empty means each kind's natural mode.
  std::optional<PayloadMode> mode;
  std::uint64_t oracle_cap = 10'000;
  double identity_tolerance = 1e-9;
  double partition_tolerance = 1e-12;

  /// Unset means every known claim; an empty list means none. On disk:
  /// `all`, `none`, or the ids.
  std::optional<std::vector<std::string>> claims;
  std::uint64_t claim_shift = 1;
  unsigned divisor_order = 3;
  double shape_tolerance = 0.25;
  double epsilon = 0.1;
  double c = 1.0;

  std::vector<std::uint32_t> overlap_n{4, 8, 16};
  std::uint32_t overlap_cap = 24;
  std::uint64_t overlap_budget = 100'000;
  std::uint64_t seed = 0;

  // Execution settings. They do not change any number in the output, so
  // they stay out of the digest.
  unsigned threads = 0;
  std::string output_dir = "report";
  std::vector<std::string> formats{"csv", "json", "svg"};

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws InvalidArgument naming the offending key.
void validate(const ExperimentConfig& config);

/// Applies one `key=value` assignment. Unknown keys are an error.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Parses the on-disk form; `#` starts a comment, blank lines are skipped.
/// The result is validated.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

/// Every key in a fixed order. parse_config(to_text(c)) == c.
std::string to_text(const ExperimentConfig& config);

/// The experiment keys only (no threads, output_dir, formats).
std::string canonical_text(const ExperimentConfig& config);

/// FNV-1a 64 of canonical_text, as 16 lowercase hex digits.
std::string config_digest(const ExperimentConfig& config);

/// Worker count: flag if given, else AREALAB_THREADS, else 0 (all cores).
unsigned resolve_threads(std::optional<unsigned> flag);

}  // namespace arealab::cli
