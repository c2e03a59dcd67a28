/// @file cli.h
/// The `mbd` command line, callable in-process.
#ifndef MBD_TOOLS_CLI_H_
#define MBD_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mbd::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kNoDiagnosis = 2;

/// Runs one invocation. `args` excludes the program name. Regular output
/// goes to `out`, diagnostics and prompts to `err`; `in` feeds interactive
/// probe answers.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, std::istream& in);

}  // namespace mbd::cli

#endif  // MBD_TOOLS_CLI_H_
