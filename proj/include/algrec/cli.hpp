#pragma once

#include <iosfwd>

namespace algrec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBudget = 3;

/// Entry point of the `algrec` tool. Messages go to `out` / `err`; data files
/// go to the output directory.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace algrec
