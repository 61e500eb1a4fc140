#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ineqlab::cli {

/// Exit codes: 0 success, 1 a check found counterexamples, 2 bad usage or
/// invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ineqlab::cli
