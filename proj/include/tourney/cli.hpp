#pragma once

#include <iosfwd>

namespace tourney::cli {

/// Entry point of the `tourney` tool. Exit status: 0 success, 1 domain
/// error (message on `err`), 2 usage or input-parse error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace tourney::cli
