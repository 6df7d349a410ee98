#pragma once

namespace capsim::cli {

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 1 failed validation checks, 2 configuration error,
/// 3 numerical failure.
int run(int argc, char** argv);

}  // namespace capsim::cli
