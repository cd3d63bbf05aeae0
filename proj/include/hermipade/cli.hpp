#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hermipade::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kConditionFailed = 2,
  kDegenerate = 3,
  kUsage = 64,
  kMissingArtifact = 66,
};

// Runs `hermipade <subcommand> ...`. args excludes the program name. Reports
// go to --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermipade::cli
