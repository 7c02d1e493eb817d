#ifndef BRAIDLAB_TOOLS_CLI_HPP
#define BRAIDLAB_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace braidlab::cli
{

enum ExitCode : int
{
  ok = 0,
  check_failed = 1,
  usage_error = 2,
};

/// Runs one batch command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace braidlab::cli

#endif // BRAIDLAB_TOOLS_CLI_HPP
