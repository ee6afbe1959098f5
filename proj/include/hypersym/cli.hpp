#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersym {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotIsomorphic = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitInternal = 4;

// Runs the CLI on args (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hypersym
