#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treebound {

/// Runs the command-line tool on the given arguments (without the program
/// name). Exit codes: 0 = success, 1 = usage or input error, 2 = a verified
/// inequality was violated or the two metric-dimension methods disagreed.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace treebound
