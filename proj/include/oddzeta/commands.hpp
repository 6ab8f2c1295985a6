#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oddzeta/report.hpp"
#include "oddzeta/truncation.hpp"
#include "oddzeta/verify.hpp"

namespace oddzeta {

constexpr int kMaxDigits = 1000;

enum class Method { series, reduced, ladder };

Method parse_method(std::string_view name);
std::string_view to_string(Method m);

struct ComputeArgs {
  long n = 1;
  int digits = 30;  // decimals after the point
  Method method = Method::ladder;
  std::optional<long> terms;  // overrides the planned term count
};

/// zeta(2n+1) to `digits` decimals. Without a terms override the certified
/// error is at most 10^{-digits}, rounding of the printed value included.
RunReport cmd_compute(const ComputeArgs& args);

/// Recomputes the requested tables; discrepant cells other than the known
/// misprint are failed checks.
RunReport cmd_tables(const std::vector<TableId>& which);

RunReport cmd_verify(const VerifyOptions& options);

/// n, zeta'(1-2n), psi(2n) - ln(2 pi) and the signs, n = 1..n_max.
RunReport cmd_signs(long n_max);

/// Exit codes.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerification = 2, kExitNumeric = 3 };

/// Full command-line entry point; writes the report to `out` (or --out) and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oddzeta
