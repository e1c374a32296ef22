#pragma once

#include <iosfwd>

namespace polycount::cli {

// Exit codes: 0 success, 1 verification or contract failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polycount::cli
