#pragma once

#include <ostream>

namespace dynsbox::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kInputError = 2, kIoError = 3 };

/// Runs the tool with the given arguments, writing to out/err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dynsbox::cli
