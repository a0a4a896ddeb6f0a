#pragma once

namespace qturan {

/// Full command-line front end: parses argv, runs the requested command, and
/// writes the report.  Returns the process exit code: 0 when every certified
/// check passes, 1 when a check fails or stays undetermined, 2 on usage or
/// domain errors.
int run_cli(int argc, char** argv);

}  // namespace qturan
