#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace masip {

/// Runs the command-line interface. Exit codes: 0 success, 1 usage error,
/// 2 input or parse error, 3 internal-consistency error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace masip
