#pragma once

#include <iosfwd>

namespace fastutf::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kUsage = 2,
  kIoFailure = 3,
};

/// Entry point for the `fastutf` tool: validate, transcode, generate, bench
/// and tables subcommands.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fastutf::cli
