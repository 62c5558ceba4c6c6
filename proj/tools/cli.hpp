#ifndef MMS_TOOLS_CLI_HPP
#define MMS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mms::cli {

enum ExitCode : int { kVerified = 0, kViolated = 1, kUsage = 2 };

/// Runs one `mms` invocation. `args` excludes the program name. The report
/// goes to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mms::cli

#endif  // MMS_TOOLS_CLI_HPP
