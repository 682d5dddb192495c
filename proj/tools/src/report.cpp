#include "arealab/cli/report.hpp"

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "arealab/arealab.hpp"
#include "arealab/cli/svg.hpp"
#include "arealab/errors.hpp"
#include "arealab/serialize.hpp"

namespace arealab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json number_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json optional_number(const std::optional<double>& v) {
  return v ? number_or_null(*v) : ordered_json(nullptr);
}

std::string csv_double(double v) { return std::isfinite(v) ? format_double(v) : std::string(); }

std::string direction_name(BoundRow::Direction d) { return d == BoundRow::Direction::Lower ? "lower" : "upper"; }

}  // namespace

std::string current_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ReportBundle build_report(const ExperimentConfig& config, std::string timestamp) {
  validate(config);
  ReportBundle b;
  b.version = std::string(kVersion);
  b.config_digest = config_digest(config);
  b.timestamp = std::move(timestamp);
  b.config = config;

  const std::uint64_t x_max = config.x_grid.back();
  const std::uint64_t l_max = config.shifts.back();
  BuildOptions options;
  options.mode = config.mode;
  options.threads = config.threads;

  for (const auto& kind : config.kinds) {
    const FunctionTable table = build_table(kind, x_max, l_max, options);
    const double tol = table.mode() == PayloadMode::Exact ? 0.0 : config.identity_tolerance;

    for (std::uint64_t x : config.x_grid) {
      IdentityRow row{kind, x, std::nullopt, bilinear_rhs(table, x), pair_sum_closed_form(table, x), false};
      if (x <= config.oracle_cap) row.oracle = double_sum_lhs_oracle(table, x, config.oracle_cap, config.threads);
      row.equal = values_match(row.bilinear, row.closed_form, tol) &&
                  (!row.oracle || values_match(*row.oracle, row.bilinear, tol));
      b.identity.push_back(std::move(row));

      for (auto& r : type1_sweep(table, x, config.shifts, config.threads)) b.correlations.push_back(std::move(r));
      b.correlations.push_back(type2(table, x));

      for (std::uint64_t l : config.shifts) {
        try {
          b.densities.push_back(estimate_density(table, x, l));
        } catch (const DegenerateSum&) {
          // A vanishing double sum (possible for signed kinds) has no densities.
        }
      }
      if (x <= config.oracle_cap) {
        try {
          b.partitions.push_back({kind, x, partition_check(table, x, config.partition_tolerance, config.oracle_cap)});
        } catch (const DegenerateSum&) {
        }
      }
    }
  }

  for (std::uint32_t n : config.overlap_n) {
    OverlapEntry entry{n <= config.overlap_cap ? exact_min_overlap(n, config.overlap_cap, config.threads)
                                               : heuristic_min_overlap(n, config.overlap_budget, config.seed),
                       {}};
    entry.bounds = bounds_table(entry.result);
    b.overlaps.push_back(std::move(entry));
  }

  ClaimConfig cc;
  cc.shift = config.claim_shift;
  cc.divisor_order = config.divisor_order;
  cc.epsilon = config.epsilon;
  cc.c = config.c;
  cc.shape_tolerance = config.shape_tolerance;
  cc.threads = config.threads;
  std::vector<std::string> ids;
  if (config.claims) {
    ids = *config.claims;
  } else {
    for (auto id : known_claims()) ids.emplace_back(id);
  }
  for (const auto& id : ids) b.claims.push_back(evaluate_claim(id, config.x_grid, cc));
  return b;
}

std::string render_json(const ReportBundle& b) {
  ordered_json root;
  ordered_json meta;
  meta["version"] = b.version;
  meta["config_digest"] = b.config_digest;
  meta["timestamp"] = b.timestamp;
  ordered_json cfg = ordered_json::object();
  std::istringstream lines(canonical_text(b.config));
  for (std::string line; std::getline(lines, line);) {
    const auto eq = line.find(" = ");
    cfg[line.substr(0, eq)] = line.substr(eq + 3);
  }
  meta["config"] = std::move(cfg);
  root["meta"] = std::move(meta);

  ordered_json tables;
  ordered_json identity = ordered_json::array();
  for (const auto& r : b.identity) {
    identity.push_back({{"kind", r.kind.name()},
                        {"x", r.x},
                        {"oracle", r.oracle ? ordered_json(to_string(*r.oracle)) : ordered_json(nullptr)},
                        {"bilinear", to_string(r.bilinear)},
                        {"closed_form", to_string(r.closed_form)},
                        {"equal", r.equal}});
  }
  tables["identity"] = std::move(identity);

  ordered_json corr = ordered_json::array();
  for (const auto& r : b.correlations) {
    ordered_json row{{"kind", r.kind.name()},
                     {"x", r.x},
                     {"shift", r.shift ? ordered_json(*r.shift) : ordered_json("type2")},
                     {"mode", std::string(to_string(r.value.mode()))},
                     {"value", to_string(r.value)},
                     {"terms", r.terms}};
    if (r.middle_term) row["middle_term"] = to_string(*r.middle_term);
    corr.push_back(std::move(row));
  }
  tables["correlations"] = std::move(corr);

  ordered_json dens = ordered_json::array();
  for (const auto& d : b.densities) {
    dens.push_back({{"kind", d.kind.name()},
                    {"x", d.x},
                    {"shift", d.shift},
                    {"c_min", optional_number(d.c_min)},
                    {"c_max", optional_number(d.c_max)},
                    {"local_density", number_or_null(d.local_density)},
                    {"d_ratio", optional_number(d.d_ratio)}});
  }
  tables["densities"] = std::move(dens);

  ordered_json parts = ordered_json::array();
  for (const auto& p : b.partitions) {
    parts.push_back({{"kind", p.kind.name()},
                     {"x", p.x},
                     {"total", to_string(p.check.total)},
                     {"diagonal", to_string(p.check.diagonal)},
                     {"off_diagonal", to_string(p.check.off_diagonal)},
                     {"d_over_x", number_or_null(p.check.d_over_x)},
                     {"diagonal_ratio", number_or_null(p.check.diagonal_ratio)},
                     {"sums_agree", p.check.sums_agree},
                     {"residual", number_or_null(p.check.residual)}});
  }
  tables["partitions"] = std::move(parts);

  ordered_json overlaps = ordered_json::array();
  for (const auto& e : b.overlaps) {
    ordered_json bounds = ordered_json::array();
    for (const auto& row : e.bounds) {
      bounds.push_back({{"name", row.name},
                        {"formula", row.formula},
                        {"direction", direction_name(row.direction)},
                        {"value", number_or_null(row.value)},
                        {"ok", row.ok_label()},
                        {"note", row.note}});
    }
    overlaps.push_back({{"n", e.result.n},
                        {"method", e.result.method_label()},
                        {"M", e.result.value},
                        {"witness", e.result.witness.bits()},
                        {"argmax", difference_histogram(e.result.witness).argmax},
                        {"bounds", std::move(bounds)}});
  }
  tables["minoverlap"] = std::move(overlaps);
  root["tables"] = std::move(tables);

  ordered_json claims = ordered_json::array();
  for (const auto& c : b.claims) {
    ordered_json points = ordered_json::array();
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      points.push_back({{"x", c.grid[i]},
                        {"computed", to_string(c.computed[i])},
                        {"bound", number_or_null(c.bound[i])},
                        {"constant", number_or_null(c.constant[i])},
                        {"c_max", number_or_null(c.c_max[i])},
                        {"verdict", std::string(to_string(c.verdicts[i]))}});
    }
    claims.push_back({{"id", c.claim_id},
                      {"description", c.description},
                      {"kind", c.kind.name()},
                      {"shift", c.shift ? ordered_json(*c.shift) : ordered_json(nullptr)},
                      {"constant_name", c.constant_name},
                      {"notes", c.notes},
                      {"points", std::move(points)}});
  }
  root["claims"] = std::move(claims);
  return root.dump(2) + "\n";
}

std::string render_identity_csv(const ReportBundle& b) {
  std::ostringstream out;
  out << "kind,x,oracle,bilinear,closed_form,equal\n";
  for (const auto& r : b.identity) {
    out << r.kind.name() << ',' << r.x << ',' << (r.oracle ? to_string(*r.oracle) : std::string()) << ','
        << to_string(r.bilinear) << ',' << to_string(r.closed_form) << ',' << (r.equal ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string render_correlations_csv(const ReportBundle& b) {
  std::ostringstream out;
  write_correlations_csv(b.correlations, out);
  return out.str();
}

std::string render_densities_csv(const ReportBundle& b) {
  std::ostringstream out;
  write_densities_csv(b.densities, out);
  return out.str();
}

std::string render_claims_csv(const ReportBundle& b) {
  std::ostringstream out;
  write_claims_csv(b.claims, out);
  return out.str();
}

std::string render_minoverlap_csv(const ReportBundle& b) {
  std::string out = "n,method,M,witness,bound,bound_value,ok\n";
  for (const auto& e : b.overlaps) {
    std::ostringstream part;
    write_minoverlap_csv(e.result, e.bounds, part);
    const std::string text = part.str();
    out += text.substr(text.find('\n') + 1);
  }
  return out;
}

namespace {

std::string render_partitions_csv(const ReportBundle& b) {
  std::ostringstream out;
  out << "kind,x,total,diagonal,off_diagonal,d_over_x,diagonal_ratio,sums_agree,residual\n";
  for (const auto& p : b.partitions) {
    out << p.kind.name() << ',' << p.x << ',' << to_string(p.check.total) << ',' << to_string(p.check.diagonal) << ','
        << to_string(p.check.off_diagonal) << ',' << csv_double(p.check.d_over_x) << ','
        << csv_double(p.check.diagonal_ratio) << ',' << (p.check.sums_agree ? "true" : "false") << ','
        << csv_double(p.check.residual) << '\n';
  }
  return out.str();
}

std::string claims_chart(const ReportBundle& b) {
  std::vector<Series> series;
  for (const auto& c : b.claims) {
    Series s{c.claim_id, {}};
    for (std::size_t i = 0; i < c.grid.size(); ++i) {
      s.points.emplace_back(static_cast<double>(c.grid[i]), c.computed[i].as_double() / c.bound[i]);
    }
    series.push_back(std::move(s));
  }
  return render_line_chart({"computed / claimed bound", "x", "ratio", true}, series);
}

std::string c_min_chart(const ReportBundle& b) {
  std::map<std::pair<std::string, std::uint64_t>, Series> by_key;
  for (const auto& d : b.densities) {
    auto [it, inserted] = by_key.try_emplace({d.kind.name(), d.shift});
    if (inserted) it->second.label = d.kind.name() + " l=" + std::to_string(d.shift);
    it->second.points.emplace_back(static_cast<double>(d.x), d.c_min.value_or(NAN));
  }
  std::vector<Series> series;
  for (auto& [key, s] : by_key) series.push_back(std::move(s));
  return render_line_chart({"c_min(l, x)", "x", "c_min", true}, series);
}

std::string correlations_chart(const ReportBundle& b) {
  std::map<std::pair<std::string, std::uint64_t>, Series> by_key;
  for (const auto& r : b.correlations) {
    const std::uint64_t shift = r.shift.value_or(0);
    auto [it, inserted] = by_key.try_emplace({r.kind.name(), shift});
    if (inserted) it->second.label = r.kind.name() + (r.shift ? " l=" + std::to_string(shift) : " type2");
    it->second.points.emplace_back(static_cast<double>(r.x), r.value.as_double() / static_cast<double>(r.x));
  }
  std::vector<Series> series;
  for (auto& [key, s] : by_key) series.push_back(std::move(s));
  return render_line_chart({"correlation / x", "x", "value / x", true}, series);
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into '" + path.string() + "'");
  }
}

std::vector<std::filesystem::path> emit_report(const ReportBundle& b, const std::filesystem::path& dir,
                                               const std::vector<std::string>& formats) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory '" + dir.string() + "'");

  const std::set<std::string> wanted(formats.begin(), formats.end());
  std::vector<std::filesystem::path> written;
  auto put = [&](const char* name, const std::string& content) {
    const auto path = dir / name;
    write_file_atomic(path, content);
    written.push_back(path);
  };
  if (wanted.count("csv")) {
    put("identity.csv", render_identity_csv(b));
    put("correlations.csv", render_correlations_csv(b));
    put("densities.csv", render_densities_csv(b));
    put("partitions.csv", render_partitions_csv(b));
    put("claims.csv", render_claims_csv(b));
    put("minoverlap.csv", render_minoverlap_csv(b));
  }
  if (wanted.count("json")) put("report.json", render_json(b));
  if (wanted.count("svg")) {
    put("claims.svg", claims_chart(b));
    put("c_min.svg", c_min_chart(b));
    put("correlations.svg", correlations_chart(b));
  }
  return written;
}

}  // namespace arealab::cli
