#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace markovwz::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kPrecisionShortfall = 2,
  kDisagreement = 3,
  kUsage = 64,
  kSingular = 65,
};

/// Runs one command. `args` excludes the program name. Reads the default
/// output format from MARKOVWZ_FORMAT when --format is not given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace markovwz::cli
