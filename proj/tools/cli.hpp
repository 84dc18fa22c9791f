#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylgk::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Environment variable holding the cell width used when rendering tableaux.
inline constexpr const char* kCellWidthEnv = "WEYLGK_CELL_WIDTH";

enum class Command { AFunction, Rs, Domino, Hollow, GkDim, AssocVar, Sweep };
enum class Format { Text, Json };

enum ExitCode : int { kSuccess = 0, kUsage = 2, kDomain = 3 };

struct Request {
  Command command = Command::AFunction;
  Format format = Format::Text;
  std::string type;   // A|B|C|D, or a group tag for assocvar
  int n = 0;          // 0 when not given
  int k = 0;
  std::string payload;
  std::optional<std::string> batch_file;
};

/// Thrown by parse_args. `exit_code` is 0 for --help and --version.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string text, int exit_code)
      : std::runtime_error(text), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

std::string to_string(Command c);

/// Parses and validates a command line. Payload syntax and arity are
/// checked here, so malformed input never reaches run().
Request parse_args(const std::vector<std::string>& args);

/// Executes a request, writing results to `out` and diagnostics to `err`.
int run(const Request& req, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code conventions of the binary.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylgk::cli
