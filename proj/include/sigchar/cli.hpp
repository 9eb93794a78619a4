#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigchar::cli {

// Dispatch a full command line (without the program name).
// Exit codes: 0 success, 1 domain error, 2 parse error, 3 requires-conjecture.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigchar::cli
