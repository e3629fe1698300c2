#pragma once

#include <iosfwd>

namespace freepacket {

/// Exit codes of the scenario runner.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitRuntimeError = 2,
  kExitStrictWarning = 3,
};

/// Entry point of the `freepacket` binary:
///   freepacket [--config PATH] [--scenario NAME] [--out DIR] [--strict]
/// Flags override values from the config file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freepacket
