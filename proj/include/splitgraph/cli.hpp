#pragma once

#include <iosfwd>
#include <iostream>
#include <string>
#include <vector>

namespace splitgraph {

/// Full command-line front end. Returns the process exit code:
/// 0 success / all expected, 1 unexpected verification failure,
/// 2 usage, parse, or configuration error.
int run_cli(int argc, const char* const* argv);

/// Testable variant: `args` excludes the program name; output, diagnostics,
/// and stdin are injectable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in = std::cin);

}  // namespace splitgraph
