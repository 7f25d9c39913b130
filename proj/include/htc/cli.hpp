#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace htc::cli {

enum ExitCode : int {
  kEqual = 0,
  kUnequal = 1,
  kInconsistent = 2,
  kUsage = 64,
  kStratumOutOfRange = 65,
  kSchema = 66,
};

/// Runs one command line (args[0] is the program name) and returns the exit
/// code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace htc::cli
