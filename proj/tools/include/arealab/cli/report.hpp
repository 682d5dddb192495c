#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "arealab/cli/config.hpp"
#include "arealab/constants.hpp"
#include "arealab/correlation.hpp"
#include "arealab/minoverlap.hpp"

namespace arealab::cli {

struct IdentityRow {
  FunctionKind kind;
  std::uint64_t x = 0;
  /// Empty above the oracle cap.
  std::optional<Value> oracle;
  Value bilinear;
  Value closed_form;
  bool equal = false;
};

struct PartitionRow {
  FunctionKind kind;
  std::uint64_t x = 0;
  PartitionCheck check;
};

struct OverlapEntry {
  OverlapResult result;
  std::vector<BoundRow> bounds;
};

/// Everything one `report` run computes. Two bundles built from equal
/// configs differ only in `timestamp`.
struct ReportBundle {
  std::string version;
  std::string config_digest;
  std::string timestamp;
  ExperimentConfig config;

  std::vector<IdentityRow> identity;
  std::vector<CorrelationResult> correlations;
  std::vector<DensityEstimate> densities;
  std::vector<PartitionRow> partitions;
  std::vector<OverlapEntry> overlaps;
  std::vector<ClaimReport> claims;
};

/// UTC now as ISO 8601, or SOURCE_DATE_EPOCH when that is set.
std::string current_timestamp();

ReportBundle build_report(const ExperimentConfig& config, std::string timestamp);

std::string render_json(const ReportBundle& bundle);
std::string render_identity_csv(const ReportBundle& bundle);
std::string render_correlations_csv(const ReportBundle& bundle);
std::string render_densities_csv(const ReportBundle& bundle);
std::string render_claims_csv(const ReportBundle& bundle);
std::string render_minoverlap_csv(const ReportBundle& bundle);

/// Writes the requested formats under `dir` and returns the paths written.
/// Each file is written to a temporary name and renamed into place.
std::vector<std::filesystem::path> emit_report(const ReportBundle& bundle, const std::filesystem::path& dir,
                                               const std::vector<std::string>& formats);

/// Write-temp-then-rename. IoError with the path on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace arealab::cli
