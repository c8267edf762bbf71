#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sginv::cli {

// Exit codes: 0 success, 1 computation error, 2 input error.
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sginv::cli
