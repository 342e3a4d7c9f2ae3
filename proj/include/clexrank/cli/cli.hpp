#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace clexrank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Entry point for the `clexrank` tool. args excludes the program name.
/// Subcommands: summarize, evaluate {pyramid, rouge, kappa, clustering},
/// graph-stats, cluster.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clexrank::cli
