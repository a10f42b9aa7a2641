#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gacalc::cli {

// Runs one gacalc command. args are the command-line arguments without the
// program name; output and diagnostics go to the given streams. Returns the
// process exit code: 0 success, 1 verification failure, 2 usage or input
// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gacalc::cli
