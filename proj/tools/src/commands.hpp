#ifndef POLYRING_TOOLS_COMMANDS_HPP
#define POLYRING_TOOLS_COMMANDS_HPP

#include <ostream>

namespace polyring::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIOError = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyring::cli

#endif
