#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace smithkit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violations = 1;
inline constexpr int exit_bad_input = 2;

// Runs one invocation. args excludes the program name. Reports go to out (or
// the --output file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smithkit::cli
