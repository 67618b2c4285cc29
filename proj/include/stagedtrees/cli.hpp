#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stagedtrees {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_syntax = 2,    // unreadable input, bad flags, malformed text
  exit_domain = 3,    // well-formed input outside the domain
  exit_internal = 4,  // invariant breach
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stagedtrees
