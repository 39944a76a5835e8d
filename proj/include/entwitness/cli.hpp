#pragma once

// Command-line front end. Exit codes:
//   0  success; evaluate found no entanglement
//   1  verify: the measurement set failed verification
//   2  usage error, bad parameter, dimension mismatch, unsupported
//      dimension, or dense-capacity refusal
//   3  evaluate: entanglement detected
//   4  threshold: no crossing on [0, 1]
//   5  file I/O failure
//   6  numerical failure, multi-crossing, or invariant violation

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace entwitness::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitEntangled = 3,
  kExitNoCrossing = 4,
  kExitIo = 5,
  kExitFailure = 6,
};

int exit_code_for(const std::exception& error);

// Reads ENTWITNESS_DENSE_LIMIT; --dense-limit takes precedence. The process
// dense limit is restored on return.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entwitness::cli
