#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace branchpack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// Runs one subcommand. `args` excludes the program name. Verdicts are
/// written to `out` as JSON (or DOT), diagnostics to `err`; `in` is read
/// when no input path is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace branchpack::cli
