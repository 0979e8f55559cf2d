#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qramsey::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,       // bad flags or unreadable input
  kNegative = 3,    // no witness found, or a claim refuted
  kDegenerate = 4,  // parameters outside the regime where the construction exists
  kBudget = 5,      // work budget or enumeration ceiling exhausted
};

// args excludes the program name. Results go to files named by --output
// or to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qramsey::cli
