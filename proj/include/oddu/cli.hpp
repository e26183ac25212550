#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oddu {

/// Runs one CLI invocation. args[0] is the program name.
/// Exit codes: 0 ok / verified, 1 check or verification failed, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddu
