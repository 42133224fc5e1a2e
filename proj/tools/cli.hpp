#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cranesched::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // I/O, parse, or validation failure
inline constexpr int kExitPrecondition = 2;  // algorithm does not apply to the instance

/// Runs the command line `args` (without the program name). Output goes to `out`,
/// diagnostics and traces to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cranesched::cli
