#pragma once

#include <stdexcept>
#include <string>

namespace arealab {

/// Base class for every error raised by the library. `kind()` is a short
/// stable tag used by the CLI in its machine-parsable diagnostics.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
  virtual const char* kind() const noexcept = 0;
};

#define AREALAB_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                         \
   public:                                                            \
    using Error::Error;                                               \
    const char* kind() const noexcept override { return #Name; }      \
  }

/// Bad argument to an operation (zero limit, odd n, empty sequence...).
AREALAB_DEFINE_ERROR(InvalidArgument);
/// Read past the end of a table, or a table built without enough headroom.
AREALAB_DEFINE_ERROR(RangeError);
/// O(x^2) oracle asked to run past its configured cap.
AREALAB_DEFINE_ERROR(BudgetExceeded);
/// Denominator double sum is zero.
AREALAB_DEFINE_ERROR(DegenerateSum);
/// Shifted correlation is zero, so the lower-bound hypothesis fails.
AREALAB_DEFINE_ERROR(ZeroCorrelation);
AREALAB_DEFINE_ERROR(UnsupportedKind);
/// Exhaustive search asked for n above its cap.
AREALAB_DEFINE_ERROR(CapExceeded);
AREALAB_DEFINE_ERROR(UnknownClaim);
AREALAB_DEFINE_ERROR(IoError);

#undef AREALAB_DEFINE_ERROR

}  // namespace arealab
