#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace regiongray {

// Runs the command line (without the program name). Returns 0 on success, 1 when a
// validation fails and 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regiongray
