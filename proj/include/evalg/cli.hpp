#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace evalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNegative = 2;

/// Runs one invocation; args excludes the program name. Result JSON goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Embedded example fixtures, one PASS/FAIL line each.
int selftest(std::ostream& out);

}  // namespace evalg::cli
