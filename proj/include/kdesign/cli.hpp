#pragma once

#include <iosfwd>

namespace kdesign {

// Exit codes of the kdesign command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Entry point of the kdesign command line tool. Subcommands:
///
///   gen kp|kc --khat K [--out PATH] [--max-blocks N]
///   gen k5 [--out PATH]
///   params kp|kc --khat K
///   params explode --v V --b B --r R --k K --lambda L --j J
///   verify PATH [--t T]
///   verify --stream kp|kc --khat K [--threads N] [--max-blocks N]
///   explode PATH --j J [--out PATH] [--max-blocks N]
///   witness --n N --khat K
///   selftest
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kdesign
