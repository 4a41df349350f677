#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quintic::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadInput = 2;

/// Runs `quintic <args...>`. The report goes to `out` (or the --out file),
/// the summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quintic::cli
