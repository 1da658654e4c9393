#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittgrass::cli {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr unsigned kDefaultSeed = 20240601;

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kWorkBound = 3,
};

// Runs one command line (args excludes the program name). Structured output
// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittgrass::cli
