#include "arealab/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "arealab/errors.hpp"

namespace arealab {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::uint64_t parse_u64(const std::string& s) {
  const exact_int v = parse_exact_int(s);
  if (v < 0) throw InvalidArgument("expected a non-negative integer, got '" + s + "'");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

void write_correlations_csv(std::span<const CorrelationResult> rows, std::ostream& out) {
  out << "kind,x,shift,value,terms\n";
  for (const auto& r : rows) {
    out << r.kind.name() << ',' << r.x << ',' << (r.shift ? std::to_string(*r.shift) : std::string("type2")) << ','
        << to_string(r.value) << ',' << r.terms << '\n';
  }
}

std::vector<CorrelationResult> read_correlations_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "kind,x,shift,value,terms") {
    throw InvalidArgument("correlation CSV: missing header");
  }
  std::vector<CorrelationResult> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != 5) throw InvalidArgument("correlation CSV: expected 5 cells in '" + line + "'");
    CorrelationResult r{parse_function_kind(cells[0]), parse_u64(cells[1]), std::nullopt, parse_value(cells[3]),
                        parse_u64(cells[4]), std::nullopt};
    if (cells[2] != "type2") r.shift = parse_u64(cells[2]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_claims_csv(std::span<const ClaimReport> reports, std::ostream& out) {
  out << "claim,x,computed,bound,constant,verdict\n";
  for (const auto& report : reports) {
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
      out << report.claim_id << ',' << report.grid[i] << ',' << to_string(report.computed[i]) << ','
          << format_double(report.bound[i]) << ',' << format_double(report.constant[i]) << ','
          << to_string(report.verdicts[i]) << '\n';
    }
  }
}

void write_minoverlap_csv(const OverlapResult& result, std::span<const BoundRow> bounds, std::ostream& out) {
  out << "n,method,M,witness,bound,bound_value,ok\n";
  for (const auto& row : bounds) {
    out << result.n << ',' << result.method_label() << ',' << result.value << ',' << result.witness.bits() << ','
        << row.formula << ',' << format_double(row.value) << ',' << row.ok_label() << '\n';
  }
}

void write_densities_csv(std::span<const DensityEstimate> rows, std::ostream& out) {
  out << "kind,x,shift,c_min,c_max,local_density,d_ratio\n";
  for (const auto& r : rows) {
    out << r.kind.name() << ',' << r.x << ',' << r.shift << ',' << optional_cell(r.c_min) << ','
        << optional_cell(r.c_max) << ',' << format_double(r.local_density) << ',' << optional_cell(r.d_ratio)
        << '\n';
  }
}

}  // namespace arealab
