#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ar::cli {

// Runs one CLI invocation (args without the program name). Returns the
// process exit code: 0 success, 2 validation error, 3 capacity error,
// 4 verification mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ar::cli
