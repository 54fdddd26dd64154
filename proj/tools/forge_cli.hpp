#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace novikov::forge {

enum ExitCode { kPass = 0, kMathFailure = 1, kUsage = 2 };

// Whole command line in-process; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace novikov::forge
