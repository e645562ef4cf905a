#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace denum::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kMismatch = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace denum::cli
