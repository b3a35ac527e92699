#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace branchkit {

// Exit codes of run_command.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_resource = 3 };

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branchkit
