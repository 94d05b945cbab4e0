#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hodge::cli {

enum ExitCode : int {
  kOk = 0,
  kVerdictFailed = 1,
  kUsage = 2,
  kInvalidInput = 3,
  kFileError = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Versioned JSON schemas of every file the tool reads or writes, keyed by name.
const std::map<std::string, std::string>& schemas();

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace hodge::cli
