#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gfm {

// Process exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidModel = 2,
  kExitNoAdmissibleOutcome = 3,  // total conflict, impossible observation, zero evidence
  kExitMismatch = 4,             // oracle mismatch or Bayes disagreement
};

/// Runs one command. `args` excludes the program name. Subcommands:
///
///   eval MODEL --observe X... [--hypothesis A+B | ~A]... [--prior L=R,...] [--format table|json]
///   table MODEL
///   posterior MODEL --prior L=R,... --observe X...
///   check MODEL --observe X...
///   builtin NAME [--param k=v]...
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfm
