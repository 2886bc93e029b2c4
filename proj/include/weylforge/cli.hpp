#ifndef WEYLFORGE_CLI_HPP
#define WEYLFORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace weylforge::cli {

// Process exit codes.
enum ExitCode : int {
    pass = 0,
    negative = 1,
    input_error = 2,
    numerical_failure = 3,
};

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weylforge::cli

#endif
