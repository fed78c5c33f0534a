#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoclique {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitMalformed = 1,
    kExitRefused = 2,
    kExitAssumption = 3,
    kExitVerifyFailed = 4,
};

/// Runs the tool in-process. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Solution document text with the elapsed-time field removed, for
/// comparing runs.
std::string without_elapsed(const std::string& solution_json);

} // namespace geoclique
