#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace akr::cli {

/// Exit codes of the akrops tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerdictFailed = 1,
  kInvalidArguments = 2,
};

/// Parsed command line.
struct RunConfig {
  std::string command;  // nodes | eval | residual | lemma | decompose | verify
  int n = 16;
  int n0 = 64;
  int doublings = 7;
  int j = 2;
  std::string kind = "akr-1d";
  std::string fn_name = "e1";
  std::vector<double> point;
  std::string format = "csv";
  double tolerance = 1e-2;
  std::optional<std::string> output_path;
  bool dry_run = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Bad command line or an argument the library rejected.
class ArgumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses arguments (without the program name). Throws ArgumentError.
/// --help is reported through `help_text` when non-null.
[[nodiscard]] RunConfig parse_arguments(const std::vector<std::string>& args,
                                        std::string* help_text = nullptr);

/// Canonical argument list; parse_arguments(to_arguments(c)) == c.
[[nodiscard]] std::vector<std::string> to_arguments(const RunConfig& config);

/// Executes a parsed configuration, writing the report to `out` (or to
/// config.output_path) and diagnostics to `err`.
[[nodiscard]] int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_arguments + run, mapping every failure to an exit code. In JSON
/// mode errors are written to `err` as {"error": {"type", "message"}}.
[[nodiscard]] int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                                 std::ostream& err);

}  // namespace akr::cli
