#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plethora::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification finds a contradiction, 2 on invalid input.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace plethora::cli
