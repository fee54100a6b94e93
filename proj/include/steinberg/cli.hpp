#pragma once

// Command-line front end. Every subcommand prints one report (json, csv or
// human) and returns an exit code:
//   0 all checks pass, 1 a check failed, 2 invalid configuration,
//   3 the coefficient characteristic equals the defining characteristic.

#include <iosfwd>
#include <string>
#include <vector>

namespace steinberg::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kAssertionFailure = 1, kInvalidConfig = 2, kCharacteristicClash = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinberg::cli
