#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddzeta/truncation.hpp"

namespace oddzeta {

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail" or "erratum"
  std::string expected;
  std::string actual;
};

/// An erratum is a tabulated value that the recomputation shows to be wrong;
/// it is reported but does not fail a run.
inline bool check_ok(const CheckResult& c) { return c.status != "fail"; }

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct RunReport {
  std::string command;
  KeyValues inputs;
  KeyValues outputs;  // numeric values as decimal strings
  std::string certified_error;
  double elapsed_ms = 0;
  std::vector<CheckResult> checks;
  std::vector<ReportTable> tables;
  std::vector<std::string> notes;

  std::size_t failures() const;
};

enum class OutputFormat { markdown, json, plain };

OutputFormat parse_format(std::string_view name);

/// JSON text. The canonical form leaves out elapsed_ms so that identical
/// runs give identical bytes.
std::string to_json(const RunReport& report, bool canonical = false);
std::string to_markdown(const RunReport& report);
std::string to_plain(const RunReport& report);
std::string render(const RunReport& report, OutputFormat format);

std::string markdown_table(const ReportTable& table);

}  // namespace oddzeta
