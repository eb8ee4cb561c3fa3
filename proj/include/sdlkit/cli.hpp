#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdlkit::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,   // the input parsed but a checked property does not hold
  kUsage = 2,         // bad command line
  kIoError = 3,       // unreadable input or unwritable output
  kParseError = 4,    // malformed structure file
  kInvalidInput = 5,  // well-formed file describing an invalid family/structure
  kInternalError = 6,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdlkit::cli
