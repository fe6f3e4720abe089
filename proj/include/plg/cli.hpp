#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace plg {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitBadInput = 2, kExitInconclusive = 3 };

/// One parsed invocation.
struct Job {
  std::string command;  // "group sub", e.g. "pl compose"
  std::vector<std::string> inputs;
  int depth = 8;
  int max_len = 12;
  int max_steps = 64;
  int breaks = 4;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string verify;  // certificate or log to replay instead of computing
  std::string output;  // empty means the output stream
};

/// Runs the command line (without the program name). Results go to `out` as
/// canonical JSON, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plg
