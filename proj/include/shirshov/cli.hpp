#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shirshov::cli {

// Exit statuses shared by every subcommand.
enum Exit : int {
  kSuccess = 0,   // success or affirmative verdict
  kNegative = 1,  // negative verdict
  kUsage = 2,     // usage or input error
  kBound = 3,     // resource bound exceeded or verdict unknown
};

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace shirshov::cli
