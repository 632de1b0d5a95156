#pragma once

#include <iosfwd>

namespace qbc::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qbc::cli
