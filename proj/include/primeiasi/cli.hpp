#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primeiasi::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // verification failed or audit mismatch
inline constexpr int kUsage = 2;        // bad flags, malformed or unreadable files
inline constexpr int kSizeLimit = 3;

// Environment variable overriding the default exact-solve ceiling.
inline constexpr const char* kCeilingEnv = "PRIMEIASI_CEILING";

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primeiasi::cli
