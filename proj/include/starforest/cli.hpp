#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starforest {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,  // verify found an invalid decomposition, or search exhausted
    kExitUsage = 2,    // bad arguments or unreadable input
    kExitBudget = 3,   // search budget ran out
};

// Runs the tool on args (args[0] is the program name). `in` stands in for
// stdin when a subcommand reads "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace starforest
