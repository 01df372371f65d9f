#ifndef FINFREE_CLI_HPP
#define FINFREE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace finfree::cli {

// Runs the command-line driver on the given arguments (program name not
// included). Returns the process exit code:
//   0 success, 1 usage error, 2 input parse failure, 3 degree mismatch,
//   4 domain error, 5 bound certificate failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace finfree::cli

#endif  // FINFREE_CLI_HPP
