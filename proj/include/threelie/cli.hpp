#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace threelie::cli {

enum ExitStatus : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name. Results go to `out`
/// as JSON (sorted keys) or text; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace threelie::cli
