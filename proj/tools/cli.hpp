#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilcert::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,     // unreadable file, malformed matrix, numerical failure
  kExitUsage = 2,          // unknown subcommand or flag, bad flag value
  kExitNoCertificate = 3,  // `certify` found no certificate
  kExitCheckFailed = 4,    // `fuzz` failures or `gallery verify` mismatch
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcert::cli
