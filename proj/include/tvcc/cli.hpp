#ifndef TVCC_CLI_HPP
#define TVCC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tvcc::cli {

inline constexpr int kExitNonCatastrophic = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCatastrophic = 2;

/// Runs one command line (without the program name) and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tvcc::cli

#endif
