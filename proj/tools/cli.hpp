#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltaorder::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kDegenerate = 3,
  kEmptySpace = 4,
  kInvalidOrder = 5,
  kEvalFailure = 6,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltaorder::cli
