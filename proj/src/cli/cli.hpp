#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kirwanlab::cli {

/// Parses `args` (without the program name), runs one command and returns the
/// process exit code. Machine output goes to `out`; errors are written to
/// `err` as {"error": <code>, "message": <text>}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kirwanlab::cli
