#pragma once

#include <iosfwd>

namespace cuntzsim::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kResource = 3,
  kInternal = 4,
};

/// Entry point of the cuntzsim command; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cuntzsim::cli
