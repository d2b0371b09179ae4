#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schroder::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kPrecondition = 2,
  kVerifyFailed = 3,
  kUsage = 64,
};

/// Environment variable that overrides the default exhaustive limit.
inline constexpr const char* kLimitEnv = "SCHRODER_EXHAUSTIVE_LIMIT";

/// Runs the command line `args` (without the program name). Objects for
/// map/check/render come from positional arguments, else one per line of
/// `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace schroder::cli
