#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arealab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`; failures print a single `error: kind=<Kind> message="<text>"`
/// line to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arealab::cli
