#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oddzeta/precision.hpp"
#include "oddzeta/report.hpp"
#include "oddzeta/truncation.hpp"

namespace oddzeta {

enum class VerifyLevel { quick, full };

VerifyLevel parse_verify_level(std::string_view name);

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  /// Replaces one expected constant with a wrong one, to exercise the
  /// failure path.
  bool inject_fault = false;
};

/// pass when value rounds or truncates to the printed entry.
CheckResult check_printed(std::string name, const Real& value, std::string_view printed);

/// pass when |a - b| < 10^{-decimals}.
CheckResult check_close(std::string name, const Real& a, const Real& b, int decimals);

CheckResult check_true(std::string name, bool ok, std::string expected, std::string actual);

/// One check per recomputed cell: pass on a match, erratum for the known
/// misprint in table 2 (row m=4, RE) when the recomputation confirms it,
/// fail otherwise.
std::vector<CheckResult> table_cell_checks(const PrecisionContext& ctx, TableId id, const ReportTable& table);

/// Worked examples and tabulated values, at 30 digits.
std::vector<CheckResult> tabulated_checks(bool inject_fault = false);

/// Oracle equivalence at 30 digits and the sweep invariants.
std::vector<CheckResult> oracle_checks();

RunReport run_verification(const VerifyOptions& options);

}  // namespace oddzeta
