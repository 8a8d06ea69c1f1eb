#pragma once

#include <iosfwd>

namespace switchopt {

/// Exit codes: 0 success, 1 usage or schema error, 2 numeric failure
/// (LP breakdown, timeout, enumeration cap).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace switchopt
