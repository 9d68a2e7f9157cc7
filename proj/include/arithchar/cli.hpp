#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arithchar::cli {

/// Runs one command line (args[0] is the program name). JSON goes to out.
///
/// Exit codes: 0 success, 1 domain error (JSON error object on out),
/// 2 usage error or unsupported type (message on err, nothing on out).
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace arithchar::cli
