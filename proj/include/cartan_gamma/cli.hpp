#ifndef CARTAN_GAMMA_CLI_HPP
#define CARTAN_GAMMA_CLI_HPP

#include <iosfwd>

namespace cartan_gamma::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the cartan-gamma tool. Returns 0 when every requested
/// verification passes, 1 on a verification failure and 2 on bad arguments.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cartan_gamma::cli

#endif
