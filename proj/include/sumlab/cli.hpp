#pragma once

namespace sumlab {

// Dispatches the sumlab tool's subcommands.  Exit status: 0 success,
// 1 domain error, 2 usage error.
int run_cli(int argc, const char* const* argv);

}  // namespace sumlab
