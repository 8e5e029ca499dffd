#ifndef OSCSEC_TOOLS_CLI_HPP
#define OSCSEC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace oscsec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitMismatch = 3;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscsec::cli

#endif  // OSCSEC_TOOLS_CLI_HPP
