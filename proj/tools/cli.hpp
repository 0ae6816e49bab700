#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fatpoints::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `fatpoints` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on a computation error (or verify mismatches),
/// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatpoints::cli
