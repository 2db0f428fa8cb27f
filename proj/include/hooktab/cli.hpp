#ifndef HOOKTAB_CLI_HPP
#define HOOKTAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hooktab::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, internal_error = 3 };

/// Runs one command line. `args` excludes the program name. Input tableaux
/// are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hooktab::cli

#endif  // HOOKTAB_CLI_HPP
