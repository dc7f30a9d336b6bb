#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbital::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitVerification = 3;

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics and witnesses to `err`. Returns 0, 2 (invalid input) or 3
/// (verification failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbital::cli
