#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace attnscope::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Parses `args` (without the program name) and runs one subcommand.
/// Returns the process exit code; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace attnscope::cli
