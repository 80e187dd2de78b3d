#pragma once

#include <string>
#include <vector>

namespace berge::cli {

struct CommandResult {
    int exit_code = 0;
    std::string out; // machine-readable document
    std::string err; // diagnostics
};

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 verify found failing rows, 2 usage or argument error, 3 runtime error
/// (unreadable or malformed input file, internal failure).
CommandResult dispatch(const std::vector<std::string>& args);

} // namespace berge::cli
