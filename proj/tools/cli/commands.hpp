#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace raag::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,          // usage error, failed check or failed verification
  kParseError = 2,       // unreadable or malformed input
  kEmptyGraph = 3,
  kJsjPrecondition = 4,  // input not connected or fewer than three vertices
  kCensusRange = 5,
  kOracleMismatch = 6,   // census fast path disagrees with the removal oracle
};

/// Runs `raag <args...>`; args exclude the program name. Machine output goes to
/// `out`, diagnostics to `err`; `in` backs the `-` input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace raag::cli
