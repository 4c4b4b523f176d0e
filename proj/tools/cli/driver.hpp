#pragma once

#include <iosfwd>

namespace coframes::cli {

/// Runs the command line. Exit status: 0 when every check passes, 1 when a
/// check fails, 2 on a usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coframes::cli
