#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3taut::cli {

/// Runs the command line given by args (without the program name) and
/// returns the process exit code. Verification commands return 1 when any
/// check fails; usage errors return CLI11's error codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3taut::cli
