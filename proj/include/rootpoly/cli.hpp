#pragma once

#include <string>
#include <vector>

// Command-line surface.  Subcommands: report, triangulate, arrangement,
// diagram, verify.  Exit codes: 0 on success, 1 when verification checks
// fail, 2 on usage errors (bad flags, unsupported family/rank, malformed
// ideal specifiers).

namespace rootpoly {

int run_cli(int argc, char** argv);

/// Same entry point for in-process callers; args exclude the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace rootpoly
