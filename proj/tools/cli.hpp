#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace powfree::cli {

enum ExitCode : int { kOk = 0, kNotFree = 1, kUsage = 2, kExhausted = 3 };

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powfree::cli
