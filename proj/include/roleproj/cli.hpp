#pragma once

#include <iosfwd>

namespace roleproj::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitInputError = 2;

// Entry point for the roleproj tool: subcommands project, remediate, render,
// diagnose, evaluate and metrics.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace roleproj::cli
