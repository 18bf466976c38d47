#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plh {

/// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitVerification = 2;

/// Runs one command. `args` excludes the program name. Elements not named
/// by a file argument are read as JSON documents from `in`, in order.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace plh
