#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "arealab/value.hpp"

namespace arealab {

/// Which arithmetic function a table holds.
class FunctionKind {
 public:
  enum class Tag {
    VonMangoldt,
    Divisor,
    EulerPhi,
    MuSquared,
    Liouville,
    BigOmega,
    MasterUpsilon,
    ConstantOne,
    Custom,
  };

  /// ConstantOne.
  FunctionKind() = default;

  static FunctionKind von_mangoldt() { return FunctionKind(Tag::VonMangoldt); }
  /// d_l; order 2 is the classical divisor function. Throws for order < 2.
  static FunctionKind divisor(unsigned order = 2);
  static FunctionKind euler_phi() { return FunctionKind(Tag::EulerPhi); }
  static FunctionKind mu_squared() { return FunctionKind(Tag::MuSquared); }
  static FunctionKind liouville() { return FunctionKind(Tag::Liouville); }
  static FunctionKind big_omega() { return FunctionKind(Tag::BigOmega); }
  static FunctionKind master_upsilon() { return FunctionKind(Tag::MasterUpsilon); }
  static FunctionKind constant_one() { return FunctionKind(Tag::ConstantOne); }
  static FunctionKind custom(std::string name);

  Tag tag() const { return tag_; }
  unsigned divisor_order() const { return order_; }
  const std::string& custom_name() const { return name_; }

  bool is_integer_valued() const;
  bool is_non_negative() const;
  PayloadMode natural_mode() const {
    return is_integer_valued() ? PayloadMode::Exact : PayloadMode::Floating;
  }

  /// Canonical short name: "vonmangoldt", "divisor", "divisor:3", "phi",
  /// "musq", "liouville", "bigomega", "upsilon", "one", "custom:<name>".
  std::string name() const;

  friend bool operator==(const FunctionKind&, const FunctionKind&) = default;

 private:
  explicit FunctionKind(Tag tag) : tag_(tag) {}
  Tag tag_ = Tag::ConstantOne;
  unsigned order_ = 0;
  std::string name_;
};

/// Accepts the canonical names plus a few aliases ("lambda", "mu2", "d3",
/// "master", "constant"). Throws InvalidArgument for anything else.
FunctionKind parse_function_kind(std::string_view text);

}  // namespace arealab
