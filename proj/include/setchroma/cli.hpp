#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "setchroma/graph.hpp"

namespace setchroma::cli {

struct Environment {
  bool inject_fault = false;  ///< forwarded to VerifyConfig::inject_fault
};

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics and timing to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

/// Resolves --graph arguments: an existing edge-list file, or one of the
/// builtin names K<n>, P<n>, C<n>, E<n> (complete, path, cycle, edgeless).
SimpleGraph load_graph(const std::string& spec);

}  // namespace setchroma::cli
