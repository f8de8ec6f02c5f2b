#pragma once

#include <iosfwd>

namespace hallbound {

/// The hallbound command line. Returns the process exit code:
/// 0 every check holds, 1 some check failed, 2 usage or compute error,
/// 3 nothing could be verified (every instance skipped).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hallbound
