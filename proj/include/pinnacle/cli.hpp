#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pinnacle {

// full command-line driver; args exclude the program name.
// exit codes: 0 ok, 1 verification found failures, 2 malformed input,
// 3 a size guard refused the request, 4 unexpected internal error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pinnacle
