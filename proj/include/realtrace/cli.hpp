#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace realtrace {

/// Runs one command line (without the program name). Returns 0 on
/// success, 1 when a check the command performs fails, 2 on bad input.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realtrace
