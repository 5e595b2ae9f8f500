#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contact1d::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
};

/// Runs one command line. args[0] is the program name. Nothing is written
/// to `out` unless the command validated and computed successfully.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form of x (at most 17 significant digits).
std::string format_number(double x);

}  // namespace contact1d::cli
