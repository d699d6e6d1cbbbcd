#pragma once

#include <iosfwd>

namespace qf::cli {

/// Runs the qf command line. Exit codes: 0 success, 1 computation error or a
/// failed reproduction check, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qf::cli
