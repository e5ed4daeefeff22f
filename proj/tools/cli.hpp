#ifndef SIGNED_SPECTRA_TOOLS_CLI_HPP
#define SIGNED_SPECTRA_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace signed_spectra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signed_spectra::cli

#endif  // SIGNED_SPECTRA_TOOLS_CLI_HPP
