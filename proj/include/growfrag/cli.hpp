#ifndef GROWFRAG_CLI_HPP
#define GROWFRAG_CLI_HPP

#include <string>
#include <vector>

namespace growfrag::cli {

// Entry point behind the growfrag binary. `args` excludes the program
// name. Exit codes: 0 success, 1 validation/computation error, 2
// tolerance breach in a verify-* subcommand, 64 usage error.
int run(const std::vector<std::string>& args);

}  // namespace growfrag::cli

#endif
