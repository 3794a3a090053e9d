#pragma once

// Subcommands of the `tropopt` tool. Paths may be "-" for stdin/stdout.
//
// Exit codes:
//   0  success
//   1  I/O failure or malformed JSON
//   2  invalid or infeasible problem (structured error written to output)
//   3  oracle grid exceeds the point cap
//   4  solver and oracle disagree

#include <iosfwd>
#include <string>
#include <vector>

#include "tropical/oracle.hpp"

namespace tropical::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIoError = 1,
  kInvalidProblem = 2,
  kOracleCapacity = 3,
  kDisagreement = 4,
};

int solve_command(const std::string& input_path, const std::string& output_path, bool pretty,
                  std::ostream& err);

int eval_command(const std::string& input_path, const std::vector<double>& point, bool pretty,
                 std::ostream& out, std::ostream& err);

int verify_command(const std::string& input_path, const oracle::VerifyOptions& options,
                   bool pretty, std::ostream& out, std::ostream& err);

}  // namespace tropical::cli
