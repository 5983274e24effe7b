#pragma once

#include <iosfwd>

namespace lagtor {

/// Entry point of the `verify` tool. Exit codes: 0 full pass, 1 any check
/// failed, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lagtor
