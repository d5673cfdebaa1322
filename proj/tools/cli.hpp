#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmotif::cli {

/// Runs the command line `args` (without the program name). Tables go to
/// `out` unless --out is given; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tmotif::cli
