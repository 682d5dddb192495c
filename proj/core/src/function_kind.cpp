#include "arealab/function_kind.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "arealab/errors.hpp"

namespace arealab {

FunctionKind FunctionKind::divisor(unsigned order) {
  if (order < 2) throw InvalidArgument("divisor order must be >= 2, got " + std::to_string(order));
  FunctionKind k(Tag::Divisor);
  k.order_ = order;
  return k;
}

FunctionKind FunctionKind::custom(std::string name) {
  FunctionKind k(Tag::Custom);
  k.name_ = std::move(name);
  return k;
}

bool FunctionKind::is_integer_valued() const {
  switch (tag_) {
    case Tag::VonMangoldt:
    case Tag::MasterUpsilon:
    case Tag::Custom:
      return false;
    default:
      return true;
  }
}

bool FunctionKind::is_non_negative() const {
  return tag_ != Tag::Liouville && tag_ != Tag::Custom;
}

std::string FunctionKind::name() const {
  switch (tag_) {
    case Tag::VonMangoldt: return "vonmangoldt";
    case Tag::Divisor: return order_ == 2 ? "divisor" : "divisor:" + std::to_string(order_);
    case Tag::EulerPhi: return "phi";
    case Tag::MuSquared: return "musq";
    case Tag::Liouville: return "liouville";
    case Tag::BigOmega: return "bigomega";
    case Tag::MasterUpsilon: return "upsilon";
    case Tag::ConstantOne: return "one";
    case Tag::Custom: return "custom:" + name_;
  }
  return "unknown";
}

namespace {

unsigned parse_order(std::string_view digits, std::string_view whole) {
  unsigned order = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), order);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("bad divisor order in '" + std::string(whole) + "'");
  }
  return order;
}

}  // namespace

FunctionKind parse_function_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });

  if (s == "vonmangoldt" || s == "lambda" || s == "von-mangoldt") return FunctionKind::von_mangoldt();
  if (s == "divisor" || s == "d") return FunctionKind::divisor(2);
  if (s.rfind("divisor:", 0) == 0) return FunctionKind::divisor(parse_order(std::string_view(s).substr(8), text));
  if (s.size() > 1 && s[0] == 'd' && std::isdigit(static_cast<unsigned char>(s[1]))) {
    return FunctionKind::divisor(parse_order(std::string_view(s).substr(1), text));
  }
  if (s == "phi" || s == "eulerphi" || s == "totient") return FunctionKind::euler_phi();
  if (s == "musq" || s == "mu2" || s == "musquared") return FunctionKind::mu_squared();
  if (s == "liouville") return FunctionKind::liouville();
  if (s == "bigomega" || s == "omega") return FunctionKind::big_omega();
  if (s == "upsilon" || s == "master") return FunctionKind::master_upsilon();
  if (s == "one" || s == "constant" || s == "constantone") return FunctionKind::constant_one();
  if (s.rfind("custom:", 0) == 0) return FunctionKind::custom(std::string(text.substr(7)));
  throw InvalidArgument("unknown function kind '" + std::string(text) + "'");
}

}  // namespace arealab
