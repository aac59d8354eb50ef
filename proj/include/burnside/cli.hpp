#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace burnside {

/// Command-line front end. Subcommands: compute, tom, cycext, check.
/// Returns 0 on success, 1 on input or invariant errors, 2 when the
/// group order cap is exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burnside
