#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kummer::cli {

enum ExitCode : int {
    kOk = 0,
    kSyntaxError = 1,
    kUnsupported = 2,
    kInternalError = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// One batch line to one JSON object; `code` receives the line's exit code.
std::string classify_line(const std::string& line, const std::string& variable, int& code);

} // namespace kummer::cli
