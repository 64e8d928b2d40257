#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace domipoly {

// Runs the command-line surface. args excludes the program name. Reports on
// out, diagnostics on err. Exit codes: 0 success/pass, 1 usage, 2 parse or
// bad content, 3 order limit exceeded, 4 verification failed.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domipoly
