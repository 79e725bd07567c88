#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liedef::cli {

enum ExitCode : int { ok = 0, negative = 1, input_error = 2 };

/// Runs one command. `args` excludes the program name. Output is buffered and
/// written to `out` once the command has finished; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace liedef::cli
