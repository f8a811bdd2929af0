#pragma once

#include <string>
#include <vector>

namespace bernstein::cli {

/// Dispatches one CLI invocation. JSON reports go to stdout, human notes
/// to stderr, CSV only to --out files. Returns the process exit code:
/// 0 success, 1 domain failure (e.g. non-convergence), 2 usage error.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

} // namespace bernstein::cli
