#pragma once

#include <string>
#include <vector>

namespace clfbench::cli {

/// Runs one CLI invocation (argv without the program name). Returns the
/// process exit code: 0 success, 1 usage error, 2 data/IO error,
/// 3 numerical failure.
int run(const std::vector<std::string>& args);

}  // namespace clfbench::cli
