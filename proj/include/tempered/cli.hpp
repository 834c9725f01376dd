#ifndef TEMPERED_CLI_HPP
#define TEMPERED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tempered {

enum ExitCode : int { exit_ok = 0, exit_domain = 1, exit_usage = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tempered

#endif
