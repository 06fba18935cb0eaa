#ifndef VFS_CLI_HPP
#define VFS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace vfs {

enum class OutputFormat { Text, Csv, Json };

/// Exit codes returned by run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vfs

#endif  // VFS_CLI_HPP
