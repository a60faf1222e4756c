#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gafunc/function.hpp"
#include "gafunc/multivector.hpp"

namespace gafunc::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kOtherError = 1,
  kParseError = 2,
  kSingularFunction = 3,
  kNonConvergence = 4,
  kRealnessFailure = 5,
};

enum class Command { charpoly, minpoly, roots, basis, func, matfunc, verify, rank };

std::string to_string(Command c);
Command parse_command(std::string_view text);

struct RunConfig {
  Command command = Command::func;
  Signature signature{3, 0};
  std::string function = "exp";
  int precision = kDefaultDigits;
  Method method = Method::recursive;
  /// Inline text or a file path. Empty means the input stream.
  std::string input;
  bool structured = false;
  /// func/matfunc: print the complex coefficients even when a real form exists
  bool complex_form = false;
};

/// Runs one command. Results go to `out`; failures become a single-line JSON
/// record {"error", "message", "exit_code"} on `err`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. Usage errors exit with kOtherError.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gafunc::cli
