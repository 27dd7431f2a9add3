#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tcedit {

// Exit codes of run_cli.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTimeout = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count for bench: TCEDIT_THREADS when set, else the hardware count.
int default_threads();

}  // namespace tcedit
