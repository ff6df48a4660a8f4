#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lefschetz::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // bad flags, unreadable files, failed self-check
  kValidation = 2,  // NotQuasiUnipotent, InvalidDegree, EqualDimensions, NotRepresentable, parse errors
  kBound = 3,       // BoundTooSmall
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefschetz::cli
