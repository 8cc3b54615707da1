#pragma once

// Command implementations behind the CLI. Each returns the process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "confexcess/errors.hpp"

namespace confexcess::commands {

enum ExitCode : int {
  kSuccess = 0,
  kAttainmentFailure = 1,
  kBadParameter = 2,
  kCertificationFailed = 3,
  kIoError = 4,
};

int exit_code_for(ErrorCode code);

/// Oracle budget default, overridable through CONFEXCESS_BUDGET.
std::uint64_t default_budget();

enum class OutputFormat { Matrix, Report, Both };

struct ConstructArgs {
  std::uint64_t q = 0;
  /// Matrix goes to `out` (or the report, for Report); with Both the report
  /// is written next to it as `<out>.report.json`. Without `out`, stdout gets
  /// the matrix for Matrix and the report otherwise.
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::Both;
  bool enumerate_pairs = false;
  bool timings = false;
  std::uint64_t budget = 0;
};

int run_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err);
int run_verify(const std::string& matrix_path, std::ostream& out, std::ostream& err);
int run_table(std::uint64_t max_m, std::uint64_t budget, std::ostream& out, std::ostream& err);

}  // namespace confexcess::commands
