#pragma once

#include <map>
#include <string>

#include "calab/ringfile.hpp"

namespace calab {

/// One CLI invocation, decoupled from argument parsing so the command layer
/// is directly testable. `args` carries string-valued options; consumers
/// parse what they need and reject what they cannot.
struct JobSpec {
  std::string command;
  std::string file;  // ring file path
  std::map<std::string, std::string> args;
};

/// Result of running a job: the full output text (JSON for every command,
/// CSV for sweep) plus the process exit code (0 ok, 1 argument/parse
/// errors, 2 domain errors, 3 failed verification gates).
struct CommandOutcome {
  std::string text;
  int exit_code = 0;
};

/// Execute a job. Never throws: failures come back as an error JSON object
/// and a nonzero exit code. Output is deterministic for fixed inputs
/// (sweeps additionally need the "deterministic" arg to zero wall times).
CommandOutcome run_command(const JobSpec& job);

/// The subcommand names run_command accepts, in display order.
const std::vector<std::string>& command_names();

}  // namespace calab
