#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace classent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Environment variable consulted for the default `omega --workers`.
inline constexpr const char* kWorkersEnv = "CLASSENT_WORKERS";

/// Full command-line entry point; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace classent::cli
