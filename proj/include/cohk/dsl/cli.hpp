#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cohk::cli {

/// Exit codes of every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violated = 1;
inline constexpr int exit_input = 2;

/// Runs one CLI invocation; `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err` as one JSON object
/// {"error": kind, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohk::cli
