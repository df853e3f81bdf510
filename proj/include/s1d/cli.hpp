#ifndef S1D_CLI_HPP
#define S1D_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace s1d::cli {

/// Exit codes: 0 success, 1 domain error (or a failed verify), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args);

}  // namespace s1d::cli

#endif  // S1D_CLI_HPP
