#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prymlab::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDegenerate = 2, kInternal = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace prymlab::cli
