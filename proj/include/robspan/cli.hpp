#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace robspan::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kUnverified = 2, kExhausted = 3 };

/// Entry point of the robspan tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace robspan::cli
