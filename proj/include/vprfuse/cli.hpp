#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vprfuse::cli {

// Runs the command line `vprfuse <args...>`; data goes to out, diagnostics to
// err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vprfuse::cli
