#ifndef LATPATH_CLI_HPP
#define LATPATH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace latpath::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

// Runs one invocation; args excludes the program name. A path argument of
// "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace latpath::cli

#endif  // LATPATH_CLI_HPP
