// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 input or usage error.

#ifndef GYSIN_TOOLS_CLI_HPP
#define GYSIN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gysin::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gysin::cli

#endif  // GYSIN_TOOLS_CLI_HPP
