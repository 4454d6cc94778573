#pragma once

namespace diracmf {

/// Full command-line front end. Returns the process exit code:
/// 0 = all invoked contracts passed, 1 = contract failure or runtime error,
/// 2 = usage error (unknown subcommand, malformed flags).
int run_cli(int argc, const char* const* argv);

}  // namespace diracmf
