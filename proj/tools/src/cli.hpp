#pragma once

#include <bsfan/budget.hpp>
#include <bsfan/signature.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bsfan::cli {

enum class Format { text, json, svg };

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kBudgetExhausted = 3,
  kPreconditionViolated = 4,
};

struct SessionConfig {
  int n = 1;
  std::optional<int> p;
  Ring ring = Ring::weyl;
  std::optional<std::string> order;
  Budget budget;
  Format format = Format::text;
  std::string out;
};

/// Runs one command line (without the program name). Reports go to out, or to
/// the --out file; diagnostics go to err. Returns an ExitCode.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsfan::cli
