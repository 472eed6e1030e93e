#ifndef PENTHEX_CLI_HPP
#define PENTHEX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace penthex {

// Command-line driver. Subcommands: decide, witness, count, oracle, bench.
// Returns 0 on success, 1 on invalid input (bad digits, unsupported f5),
// 2 on an internal invariant violation.
int run_cli(int argc, char** argv);

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};
// same driver with captured streams, for tests
CliResult run_cli_captured(const std::vector<std::string>& args);

}  // namespace penthex

#endif
