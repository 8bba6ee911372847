#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfctl {

// Process exit codes.
enum exit_code : int {
  exit_success = 0,
  exit_verification_failed = 1,
  exit_usage = 2,   // bad flags or malformed input document
  exit_domain = 3,  // well-formed input outside an operation's domain
};

/// Runs `hopfctl` with `args` (excluding the program name). The input
/// document, when the subcommand takes one, is read from `in` unless --in
/// names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hopfctl
