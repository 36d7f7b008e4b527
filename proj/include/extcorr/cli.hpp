#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extcorr::cli {

enum ExitCode : int {
  kOk = 0,
  kCertifiedFail = 1,
  kInvalidInput = 2,
  kRegimeUnknown = 3,
  kLimitExceeded = 4,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace extcorr::cli
