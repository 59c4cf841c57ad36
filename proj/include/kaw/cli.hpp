#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kaw {

/// Runs the command line given as arguments (without the program name).
/// Exit codes: 0 success / verdict holds, 1 inequivalence or violation found,
/// 2 usage, parse, or resource errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kaw
