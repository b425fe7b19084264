#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hoising::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // numerical failure or audit breach
inline constexpr int kExitInput = 2;    // bad flags or unreadable/invalid input

inline constexpr double kAuditMaxIncrease = 1e-6;
inline constexpr double kAuditNaeGradient = 1e-5;
inline constexpr double kAuditCutGradient = 1e-4;

/// Runs `hoising <subcommand> ...`. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hoising::cli
