#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace radixcode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitVerificationFailed = 3;

/// Dispatches a full command line (without argv[0]). Results go to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radixcode::cli
