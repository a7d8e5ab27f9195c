#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqs::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidation = 2,
  kShapePrecondition = 3,
  kIo = 4,
};

/// Runs one `gqs` invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gqs::cli
