#pragma once

#include <ostream>
#include <span>
#include <string>

namespace gridtds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTooLarge = 3;

/// Runs one command line (without the program name). Output goes to `out`
/// only when the command succeeds or a verify suite reports; errors go to `err`.
int run_cli(std::span<const std::string> args, std::ostream & out, std::ostream & err);

} // namespace gridtds::cli
