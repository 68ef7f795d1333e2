#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexelim {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitCertificate = 2;

/// Runs one command. `args` excludes the program name; a file argument of
/// "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lexelim
