#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symkron::cli {

/// Dispatches one command line (without the program name). Data goes to
/// out, diagnostics to err. Returns the process exit code: 0 on success,
/// 1 when a verification suite finds a failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace symkron::cli
