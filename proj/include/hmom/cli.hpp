#ifndef HMOM_CLI_HPP
#define HMOM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hmom {

inline constexpr const char* kToolVersion = "0.1.0";

/// Parses and runs one subcommand. Output goes to `out` (or the --out file),
/// error records to `err`. Returns 0 on success, 2 on usage errors, 1 on
/// numerical / consistency failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hmom

#endif  // HMOM_CLI_HPP
