#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossway {

enum ExitCode : int {
    kExitOk = 0,
    kExitFindings = 1,
    kExitValidation = 2,
    kExitParse = 3,
    kExitUsage = 4,
};

/// Runs the command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossway
