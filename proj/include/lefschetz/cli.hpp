#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lefschetz::cli {

/// Runs one command. `args` excludes the program name.
///
/// Exit codes: 0 the command succeeded and any checked property holds,
/// 1 a checked property fails, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace lefschetz::cli
