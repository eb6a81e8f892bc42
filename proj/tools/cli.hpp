#ifndef TETRACHAIN_TOOLS_CLI_HPP
#define TETRACHAIN_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tetrachain::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
  unsigned threads = 0;
  std::string choices;
  std::string format = "json";
  std::size_t cap = 10;
  std::string input = "-";
  bool allow_non_sphere = false;
  bool dot = false;
};

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tetrachain::cli

#endif  // TETRACHAIN_TOOLS_CLI_HPP
