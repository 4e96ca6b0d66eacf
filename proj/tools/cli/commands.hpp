#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mfcalc::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 on success, 1 on domain errors or failed checks, 2 on parse and
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfcalc::cli
