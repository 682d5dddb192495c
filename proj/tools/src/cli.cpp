#include "arealab/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "arealab/arealab.hpp"
#include "arealab/cli/config.hpp"
#include "arealab/cli/report.hpp"
#include "arealab/errors.hpp"

namespace arealab::cli {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out += ch;
  }
  return out + '"';
}

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  err << "error: kind=" << kind << " message=" << quote(message) << '\n';
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const UnknownClaim*>(&e) ||
      dynamic_cast<const UnsupportedKind*>(&e)) {
    return kExitUsage;
  }
  return kExitComputation;
}

std::optional<PayloadMode> parse_mode(const std::string& s) {
  if (s == "auto") return std::nullopt;
  return s == "exact" ? PayloadMode::Exact : PayloadMode::Floating;
}

/// Sends `text` to `path` (atomically) or to `out` when no path was given.
void deliver(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

struct SieveArgs {
  std::string kind, mode = "auto", csv;
  std::uint64_t limit = 0, headroom = 0, segment = std::uint64_t{1} << 26;
  bool summary = false;
};

struct IdentityArgs {
  std::string kind;
  std::uint64_t x = 0, cap = kDefaultOracleCap;
  bool exact = false, floating = false;
  double tolerance = kDefaultIdentityTolerance;
};

struct CorrelateArgs {
  std::string kind, mode = "auto", csv;
  std::vector<std::uint64_t> x, shifts;
  bool type2 = false;
};

struct ConstantsArgs {
  std::string kind, mode = "auto", csv;
  std::vector<std::uint64_t> x, shifts{1};
  bool partition = false;
  double tolerance = 1e-12;
  std::uint64_t cap = kDefaultOracleCap;
};

struct ClaimsArgs {
  std::vector<std::string> ids;
  std::vector<std::uint64_t> grid;
  ClaimConfig config;
  bool list = false;
  std::string csv;
};

struct OverlapArgs {
  std::uint32_t n = 0, cap = kDefaultExhaustiveCap;
  bool exact = false, heuristic = false, csv = false;
  std::uint64_t budget = kDefaultAnnealingBudget, seed = 0;
};

struct ReportArgs {
  std::string config_path, out_dir;
  std::vector<std::string> sets, formats;
  bool dump = false;
};

int run_sieve(const SieveArgs& a, unsigned threads, std::ostream& out) {
  BuildOptions opts{parse_mode(a.mode), a.segment, threads};
  const auto table = build_table(parse_function_kind(a.kind), a.limit, a.headroom, opts);
  if (a.summary) {
    const auto sum = prefix_sums(table).at(a.limit);
    out << "kind=" << table.kind().name() << " limit=" << a.limit << " mode=" << to_string(table.mode())
        << " sum=" << to_string(sum);
    if (a.limit >= 3) {
      try {
        out << " sum/reference=" << format_double(sum.as_double() / mean_value_reference(table.kind(), a.limit));
      } catch (const UnsupportedKind&) {
        // No closed-form leading term for this kind.
      }
    }
    out << '\n';
    return kExitOk;
  }
  std::ostringstream text;
  write_table_csv(table, text);
  deliver(a.csv, text.str(), out);
  return kExitOk;
}

int run_identity(const IdentityArgs& a, unsigned threads, std::ostream& out, std::ostream& err) {
  BuildOptions opts;
  opts.threads = threads;
  if (a.exact) opts.mode = PayloadMode::Exact;
  if (a.floating) opts.mode = PayloadMode::Floating;
  const auto table = build_table(parse_function_kind(a.kind), a.x, 0, opts);
  const auto result = identity_check(table, a.x, a.tolerance, a.cap);
  const auto closed = pair_sum_closed_form(table, a.x);
  if (!result.equal) {
    out << "lhs=" << to_string(result.lhs) << " rhs=" << to_string(result.rhs) << '\n';
    report_error(err, "IdentityMismatch", "double sum and bilinear form differ at x=" + std::to_string(a.x));
    return kExitComputation;
  }
  out << "lhs=rhs=" << to_string(result.rhs) << '\n';
  out << "closed_form=" << to_string(closed) << " mode=" << to_string(result.mode) << '\n';
  return kExitOk;
}

int run_correlate(const CorrelateArgs& a, unsigned threads, std::ostream& out) {
  if (a.shifts.empty() && !a.type2) throw InvalidArgument("correlate: give --shift and/or --type2");
  std::uint64_t x_max = *std::max_element(a.x.begin(), a.x.end());
  const std::uint64_t l_max = a.shifts.empty() ? 0 : *std::max_element(a.shifts.begin(), a.shifts.end());
  const auto table = build_table(parse_function_kind(a.kind), x_max, l_max, {parse_mode(a.mode), std::uint64_t{1} << 26, threads});
  std::vector<CorrelationResult> rows;
  for (std::uint64_t x : a.x) {
    for (auto& r : type1_sweep(table, x, a.shifts, threads)) rows.push_back(std::move(r));
    if (a.type2) rows.push_back(type2(table, x));
  }
  std::ostringstream text;
  write_correlations_csv(rows, text);
  deliver(a.csv, text.str(), out);
  return kExitOk;
}

int run_constants(const ConstantsArgs& a, unsigned threads, std::ostream& out) {
  const std::uint64_t x_max = *std::max_element(a.x.begin(), a.x.end());
  const std::uint64_t l_max = *std::max_element(a.shifts.begin(), a.shifts.end());
  const auto table = build_table(parse_function_kind(a.kind), x_max, l_max, {parse_mode(a.mode), std::uint64_t{1} << 26, threads});
  std::ostringstream text;
  if (a.partition) {
    text << "kind,x,total,diagonal,off_diagonal,d_over_x,diagonal_ratio,sums_agree,residual\n";
    for (std::uint64_t x : a.x) {
      const auto p = partition_check(table, x, a.tolerance, a.cap);
      text << table.kind().name() << ',' << x << ',' << to_string(p.total) << ',' << to_string(p.diagonal) << ','
           << to_string(p.off_diagonal) << ',' << format_double(p.d_over_x) << ',' << format_double(p.diagonal_ratio)
           << ',' << (p.sums_agree ? "true" : "false") << ',' << format_double(p.residual) << '\n';
    }
  } else {
    std::vector<DensityEstimate> rows;
    for (std::uint64_t x : a.x) {
      for (std::uint64_t l : a.shifts) rows.push_back(estimate_density(table, x, l));
    }
    write_densities_csv(rows, text);
  }
  deliver(a.csv, text.str(), out);
  return kExitOk;
}

int run_claims(ClaimsArgs a, unsigned threads, std::ostream& out) {
  if (a.list) {
    for (auto id : known_claims()) out << id << '\n';
    return kExitOk;
  }
  if (a.grid.empty()) throw InvalidArgument("claims: --grid is required");
  std::vector<std::string> ids = a.ids;
  if (ids.empty()) {
    for (auto id : known_claims()) ids.emplace_back(id);
  }
  a.config.threads = threads;
  std::vector<ClaimReport> reports;
  for (const auto& id : ids) reports.push_back(evaluate_claim(id, a.grid, a.config));
  std::ostringstream text;
  write_claims_csv(reports, text);
  deliver(a.csv, text.str(), out);
  return kExitOk;
}

int run_minoverlap(const OverlapArgs& a, unsigned threads, std::ostream& out) {
  const bool exact = a.exact || (!a.heuristic && a.n <= a.cap);
  const auto result = exact ? exact_min_overlap(a.n, a.cap, threads) : heuristic_min_overlap(a.n, a.budget, a.seed);
  if (a.csv) {
    write_minoverlap_csv(result, bounds_table(result), out);
    return kExitOk;
  }
  out << "M=" << result.value << " witness=" << result.witness.bits() << " method=" << result.method_label() << '\n';
  return kExitOk;
}

int run_report(const ReportArgs& a, std::optional<unsigned> threads_flag, std::ostream& out) {
  ExperimentConfig config = a.config_path.empty() ? ExperimentConfig{} : load_config(a.config_path);
  for (const auto& assignment : a.sets) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw InvalidArgument("--set expects key=value, got '" + assignment + "'");
    apply_setting(config, assignment.substr(0, eq), assignment.substr(eq + 1));
  }
  if (!a.out_dir.empty()) config.output_dir = a.out_dir;
  if (!a.formats.empty()) config.formats = a.formats;
  if (threads_flag || std::getenv("AREALAB_THREADS")) config.threads = resolve_threads(threads_flag);
  validate(config);
  if (a.dump) {
    out << to_text(config);
    return kExitOk;
  }
  set_default_threads(config.threads);
  const auto bundle = build_report(config, current_timestamp());
  for (const auto& path : emit_report(bundle, config.output_dir, config.formats)) out << "wrote " << path.string() << '\n';
  out << "digest=" << bundle.config_digest << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"arealab: correlation sums, area identities and minimum overlap experiments", "arealab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  std::optional<unsigned> threads_flag;
  app.add_option("--threads", threads_flag, "Worker threads (default: AREALAB_THREADS, else all cores)");

  const auto mode_check = CLI::IsMember({"auto", "exact", "floating"});

  SieveArgs sieve;
  auto* s = app.add_subcommand("sieve", "Tabulate an arithmetic function as CSV n,value");
  s->add_option("--kind", sieve.kind, "Function kind")->required();
  s->add_option("--limit", sieve.limit, "Largest n")->required();
  s->add_option("--headroom", sieve.headroom, "Extra entries past the limit");
  s->add_option("--mode", sieve.mode, "Payload mode")->check(mode_check);
  s->add_option("--segment", sieve.segment, "Entries per sieve segment")->check(CLI::PositiveNumber);
  s->add_flag("--summary", sieve.summary, "Print the summatory value instead of the table");
  s->add_option("--csv", sieve.csv, "Write the table to this file");

  IdentityArgs ident;
  auto* i = app.add_subcommand("identity-check", "Compare the double sum with its bilinear form");
  i->add_option("--kind", ident.kind, "Function kind")->required();
  i->add_option("--x", ident.x, "Upper limit x")->required();
  auto* ex = i->add_flag("--exact", ident.exact, "Integer arithmetic");
  i->add_flag("--floating", ident.floating, "Floating arithmetic")->excludes(ex);
  i->add_option("--tolerance", ident.tolerance, "Relative tolerance in floating mode")->check(CLI::PositiveNumber);
  i->add_option("--cap", ident.cap, "Largest x for the quadratic oracle");

  CorrelateArgs corr;
  auto* c = app.add_subcommand("correlate", "Type-1 and type-2 correlation sums as CSV");
  c->add_option("--kind", corr.kind, "Function kind")->required();
  c->add_option("--x", corr.x, "Upper limit(s) x")->required()->delimiter(',');
  c->add_option("--shift", corr.shifts, "Shift(s) l for type-1 sums")->delimiter(',');
  c->add_flag("--type2", corr.type2, "Also emit the type-2 sum at each x");
  c->add_option("--mode", corr.mode, "Payload mode")->check(mode_check);
  c->add_option("--csv", corr.csv, "Write the CSV to this file");

  ConstantsArgs cons;
  auto* k = app.add_subcommand("constants", "c_min, c_max, N(x,l)/x and D(x)/x as CSV");
  k->add_option("--kind", cons.kind, "Function kind")->required();
  k->add_option("--x", cons.x, "Upper limit(s) x")->required()->delimiter(',');
  k->add_option("--shift", cons.shifts, "Shift(s) l")->delimiter(',');
  k->add_option("--mode", cons.mode, "Payload mode")->check(mode_check);
  k->add_flag("--partition", cons.partition, "Emit the diagonal / off-diagonal split instead");
  k->add_option("--tolerance", cons.tolerance, "Partition tolerance in floating mode")->check(CLI::PositiveNumber);
  k->add_option("--cap", cons.cap, "Largest x for the quadratic partition sum");
  k->add_option("--csv", cons.csv, "Write the CSV to this file");

  ClaimsArgs claims;
  auto* cl = app.add_subcommand("claims", "Evaluate stated asymptotic claims on an x grid");
  cl->add_option("--claim", claims.ids, "Claim id(s); default all")->delimiter(',');
  cl->add_option("--grid", claims.grid, "Strictly increasing x values")->delimiter(',');
  cl->add_option("--shift", claims.config.shift, "Shift for the type-1 claims");
  cl->add_option("--divisor-order", claims.config.divisor_order, "Order l of d_l");
  cl->add_option("--epsilon", claims.config.epsilon, "Liouville envelope epsilon");
  cl->add_option("--c", claims.config.c, "Liouville envelope c");
  cl->add_option("--shape-tolerance", claims.config.shape_tolerance, "Allowed relative gap");
  cl->add_flag("--list", claims.list, "List claim ids");
  cl->add_option("--csv", claims.csv, "Write the CSV to this file");

  OverlapArgs mo;
  auto* m = app.add_subcommand("minoverlap", "Minimum overlap M(n) with bound comparison");
  m->add_option("--n", mo.n, "Even n")->required();
  auto* mex = m->add_flag("--exact", mo.exact, "Exhaustive search");
  m->add_flag("--heuristic", mo.heuristic, "Simulated annealing")->excludes(mex);
  m->add_option("--budget", mo.budget, "Annealing iterations");
  m->add_option("--seed", mo.seed, "Annealing seed");
  m->add_option("--cap", mo.cap, "Largest n for exhaustive search");
  m->add_flag("--csv", mo.csv, "Print the bound comparison CSV");

  ReportArgs rep;
  auto* r = app.add_subcommand("report", "Run a configured experiment and write CSV/JSON/SVG");
  r->add_option("--config", rep.config_path, "key = value config file");
  r->add_option("--set", rep.sets, "Override one key: key=value");
  r->add_option("--out", rep.out_dir, "Output directory");
  r->add_option("--formats", rep.formats, "Subset of csv,json,svg")->delimiter(',');
  r->add_flag("--dump-config", rep.dump, "Print the effective config and exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kExitUsage;
  }

  try {
    const unsigned threads = resolve_threads(threads_flag);
    set_default_threads(threads);
    if (*s) return run_sieve(sieve, threads, out);
    if (*i) return run_identity(ident, threads, out, err);
    if (*c) return run_correlate(corr, threads, out);
    if (*k) return run_constants(cons, threads, out);
    if (*cl) return run_claims(claims, threads, out);
    if (*m) return run_minoverlap(mo, threads, out);
    return run_report(rep, threads_flag, out);
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kExitComputation;
  }
}

}  // namespace arealab::cli
