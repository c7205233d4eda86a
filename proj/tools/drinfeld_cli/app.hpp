#pragma once

#include <iosfwd>

namespace drinfeld::cli {

/// Parse and execute one command line.  Exit codes: 0 success, 1 domain
/// rejection (precondition named on stderr, or in the JSON error document),
/// 2 usage error.  In JSON mode exactly one document goes to out.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace drinfeld::cli
