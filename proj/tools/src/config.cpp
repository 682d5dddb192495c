#include "arealab/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "arealab/constants.hpp"
#include "arealab/errors.hpp"

namespace arealab::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T parse_unsigned(std::string_view key, std::string_view s) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidArgument("config key '" + std::string(key) + "': not an unsigned integer: '" + std::string(s) + "'");
  }
  return v;
}

double parse_real(std::string_view key, std::string_view s) {
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw InvalidArgument("config key '" + std::string(key) + "': not a finite number: '" + buf + "'");
  }
  return v;
}

template <class T>
std::vector<T> parse_unsigned_list(std::string_view key, std::string_view s) {
  std::vector<T> out;
  for (auto item : split_list(s)) out.push_back(parse_unsigned<T>(key, item));
  return out;
}

template <class T>
std::string join(const std::vector<T>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_same_v<T, std::string>) {
      out += items[i];
    } else if constexpr (std::is_same_v<T, FunctionKind>) {
      out += items[i].name();
    } else {
      out += std::to_string(items[i]);
    }
  }
  return out;
}

template <class T>
void require_increasing(const std::vector<T>& v, const char* key) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) throw InvalidArgument(std::string("config key '") + key + "' must be strictly increasing");
  }
}

void require_positive(double v, const char* key) {
  if (!(v > 0)) throw InvalidArgument(std::string("config key '") + key + "' must be positive");
}

void write_experiment_keys(std::ostream& out, const ExperimentConfig& c) {
  out << "kinds = " << join(c.kinds) << '\n';
  out << "x_grid = " << join(c.x_grid) << '\n';
  out << "shifts = " << join(c.shifts) << '\n';
  out << "mode = " << (c.mode ? std::string(to_string(*c.mode)) : "auto") << '\n';
  out << "oracle_cap = " << c.oracle_cap << '\n';
  out << "identity_tolerance = " << format_double(c.identity_tolerance) << '\n';
  out << "partition_tolerance = " << format_double(c.partition_tolerance) << '\n';
  out << "claims = " << (!c.claims ? std::string("all") : c.claims->empty() ? std::string("none") : join(*c.claims))
      << '\n';
  out << "claim_shift = " << c.claim_shift << '\n';
  out << "divisor_order = " << c.divisor_order << '\n';
  out << "shape_tolerance = " << format_double(c.shape_tolerance) << '\n';
  out << "epsilon = " << format_double(c.epsilon) << '\n';
  out << "c = " << format_double(c.c) << '\n';
  out << "overlap_n = " << join(c.overlap_n) << '\n';
  out << "overlap_cap = " << c.overlap_cap << '\n';
  out << "overlap_budget = " << c.overlap_budget << '\n';
  out << "seed = " << c.seed << '\n';
}

}  // namespace

void validate(const ExperimentConfig& c) {
  if (c.kinds.empty()) throw InvalidArgument("config key 'kinds' must not be empty");
  for (const auto& k : c.kinds) {
    if (k.tag() == FunctionKind::Tag::Custom) throw InvalidArgument("config key 'kinds': custom kinds cannot be sieved");
    if (c.mode == PayloadMode::Exact && !k.is_integer_valued()) {
      throw InvalidArgument("config key 'mode': exact mode needs integer-valued kinds, got " + k.name());
    }
  }
  if (c.x_grid.empty()) throw InvalidArgument("config key 'x_grid' must not be empty");
  if (c.x_grid.front() < 3) throw InvalidArgument("config key 'x_grid': every x must be >= 3");
  require_increasing(c.x_grid, "x_grid");
  if (c.shifts.empty()) throw InvalidArgument("config key 'shifts' must not be empty");
  if (c.shifts.front() == 0) throw InvalidArgument("config key 'shifts': shifts must be >= 1");
  require_increasing(c.shifts, "shifts");
  require_positive(c.identity_tolerance, "identity_tolerance");
  require_positive(c.partition_tolerance, "partition_tolerance");
  require_positive(c.shape_tolerance, "shape_tolerance");
  if (!(c.epsilon > 0 && c.epsilon < 1)) throw InvalidArgument("config key 'epsilon' must lie in (0, 1)");
  require_positive(c.c, "c");
  if (c.claim_shift == 0) throw InvalidArgument("config key 'claim_shift' must be >= 1");
  if (c.divisor_order < 2) throw InvalidArgument("config key 'divisor_order' must be >= 2");
  const auto known = known_claims();
  for (const auto& id : c.claims.value_or(std::vector<std::string>{})) {
    if (std::find(known.begin(), known.end(), id) == known.end()) throw UnknownClaim("unknown claim id: " + id);
  }
  for (auto n : c.overlap_n) {
    if (n == 0 || n % 2) throw InvalidArgument("config key 'overlap_n': sizes must be even and positive");
  }
  require_increasing(c.overlap_n, "overlap_n");
  if (c.overlap_budget == 0) throw InvalidArgument("config key 'overlap_budget' must be > 0");
  for (const auto& f : c.formats) {
    if (f != "csv" && f != "json" && f != "svg") throw InvalidArgument("config key 'formats': unknown format '" + f + "'");
  }
  if (c.output_dir.empty()) throw InvalidArgument("config key 'output_dir' must not be empty");
}

void apply_setting(ExperimentConfig& c, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "kinds") {
    c.kinds.clear();
    for (auto item : split_list(value)) c.kinds.push_back(parse_function_kind(item));
  } else if (key == "x_grid") {
    c.x_grid = parse_unsigned_list<std::uint64_t>(key, value);
  } else if (key == "shifts") {
    c.shifts = parse_unsigned_list<std::uint64_t>(key, value);
  } else if (key == "mode") {
    if (value == "auto") c.mode.reset();
    else if (value == "exact") c.mode = PayloadMode::Exact;
    else if (value == "floating") c.mode = PayloadMode::Floating;
    else throw InvalidArgument("config key 'mode': expected auto, exact or floating");
  } else if (key == "oracle_cap") {
    c.oracle_cap = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "identity_tolerance") {
    c.identity_tolerance = parse_real(key, value);
  } else if (key == "partition_tolerance") {
    c.partition_tolerance = parse_real(key, value);
  } else if (key == "claims") {
    if (value == "all") {
      c.claims.reset();
    } else {
      c.claims.emplace();
      if (value != "none") {
        for (auto item : split_list(value)) c.claims->emplace_back(item);
      }
    }
  } else if (key == "claim_shift") {
    c.claim_shift = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "divisor_order") {
    c.divisor_order = parse_unsigned<unsigned>(key, value);
  } else if (key == "shape_tolerance") {
    c.shape_tolerance = parse_real(key, value);
  } else if (key == "epsilon") {
    c.epsilon = parse_real(key, value);
  } else if (key == "c") {
    c.c = parse_real(key, value);
  } else if (key == "overlap_n") {
    c.overlap_n = parse_unsigned_list<std::uint32_t>(key, value);
  } else if (key == "overlap_cap") {
    c.overlap_cap = parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "overlap_budget") {
    c.overlap_budget = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "seed") {
    c.seed = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "threads") {
    c.threads = parse_unsigned<unsigned>(key, value);
  } else if (key == "output_dir") {
    c.output_dir = std::string(value);
  } else if (key == "formats") {
    c.formats.clear();
    for (auto item : split_list(value)) c.formats.emplace_back(item);
  } else {
    throw InvalidArgument("unknown config key '" + std::string(key) + "'");
  }
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_setting(c, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_text(const ExperimentConfig& c) {
  std::ostringstream out;
  write_experiment_keys(out, c);
  out << "threads = " << c.threads << '\n';
  out << "output_dir = " << c.output_dir << '\n';
  out << "formats = " << join(c.formats) << '\n';
  return out.str();
}

std::string canonical_text(const ExperimentConfig& c) {
  std::ostringstream out;
  write_experiment_keys(out, c);
  return out.str();
}

std::string config_digest(const ExperimentConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_text(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("AREALAB_THREADS"); env && *env) {
    return parse_unsigned<unsigned>("AREALAB_THREADS", trim(env));
  }
  return 0;
}

}  // namespace arealab::cli
