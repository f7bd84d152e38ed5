#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finpart::cli {

// Dispatches one command line (argv without the program name). Results go
// to `out`, diagnostics to `err`. Returns the process exit code: 0 success,
// 1 domain failure (parse error, exceeded budget, failed verification),
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finpart::cli
