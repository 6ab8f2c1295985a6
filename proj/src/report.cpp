#include "oddzeta/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "oddzeta/error.hpp"

namespace oddzeta {

using json = nlohmann::ordered_json;

std::size_t RunReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!check_ok(c)) ++n;
  return n;
}

OutputFormat parse_format(std::string_view name) {
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  if (name == "json") return OutputFormat::json;
  if (name == "plain" || name == "text") return OutputFormat::plain;
  fail(ErrorKind::invalid_argument, "unknown output format '" + std::string(name) + "'");
}

namespace {

json key_values(const KeyValues& kv) {
  json out = json::object();
  for (const auto& [k, v] : kv) out[k] = v;
  return out;
}

json table_json(const ReportTable& t) {
  json cells = json::array();
  for (const auto& c : t.checks)
    cells.push_back({{"row", c.row}, {"column", t.headers.at(c.column)}, {"expected", c.expected},
                     {"actual", c.actual}, {"status", c.status}});
  return {{"title", t.title}, {"headers", t.headers}, {"rows", t.rows}, {"cells", cells}, {"notes", t.notes}};
}

std::string elapsed_text(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << ms;
  return os.str();
}

}  // namespace

std::string to_json(const RunReport& r, bool canonical) {
  json j;
  j["command"] = r.command;
  j["inputs"] = key_values(r.inputs);
  j["outputs"] = key_values(r.outputs);
  j["certified_error"] = r.certified_error;
  if (!canonical) j["elapsed_ms"] = elapsed_text(r.elapsed_ms);
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", c.status}, {"expected", c.expected}, {"actual", c.actual}});
  j["checks"] = checks;
  if (!r.tables.empty()) {
    json tables = json::array();
    for (const auto& t : r.tables) tables.push_back(table_json(t));
    j["tables"] = tables;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string markdown_table(const ReportTable& t) {
  std::ostringstream os;
  if (!t.title.empty()) os << "### " << t.title << "\n\n";
  os << "|";
  for (const auto& h : t.headers) os << " " << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < t.headers.size(); ++i) os << "---|";
  os << "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << "|";
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      std::string cell = t.rows[r][c];
      for (const auto& chk : t.checks)
        if (chk.row == r && chk.column == c && chk.status != "match")
          cell += chk.status == "discrepant" ? " (printed " + chk.expected + ")" : " *";
      os << " " << cell << " |";
    }
    os << "\n";
  }
  bool truncated = false;
  for (const auto& chk : t.checks) truncated |= chk.status == "match (truncated)";
  if (truncated) os << "\n\\* printed value is this one cut off rather than rounded\n";
  for (const auto& n : t.notes) os << "\n" << n << "\n";
  return os.str();
}

std::string to_markdown(const RunReport& r) {
  std::ostringstream os;
  os << "## oddzeta " << r.command << "\n\n";
  if (!r.inputs.empty()) {
    os << "| input | value |\n|---|---|\n";
    for (const auto& [k, v] : r.inputs) os << "| " << k << " | " << v << " |\n";
    os << "\n";
  }
  if (!r.outputs.empty()) {
    os << "| output | value |\n|---|---|\n";
    for (const auto& [k, v] : r.outputs) os << "| " << k << " | " << v << " |\n";
    os << "\n";
  }
  if (!r.certified_error.empty()) os << "Certified error: " << r.certified_error << "\n\n";
  for (const auto& t : r.tables) os << markdown_table(t) << "\n";
  if (!r.checks.empty()) {
    os << "| check | status | expected | actual |\n|---|---|---|---|\n";
    for (const auto& c : r.checks)
      os << "| " << c.name << " | " << c.status << " | " << c.expected << " | " << c.actual << " |\n";
    os << "\n" << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks ok\n\n";
  }
  for (const auto& n : r.notes) os << n << "\n\n";
  return os.str();
}

std::string to_plain(const RunReport& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r.outputs) os << k << " = " << v << "\n";
  if (!r.certified_error.empty()) os << "certified_error = " << r.certified_error << "\n";
  for (const auto& t : r.tables) {
    os << t.title << "\n";
    for (std::size_t i = 0; i < t.headers.size(); ++i) os << (i ? "\t" : "") << t.headers[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
      os << "\n";
    }
  }
  for (const auto& c : r.checks)
    os << (c.status == "pass" ? "ok   " : c.status == "erratum" ? "err  " : "FAIL ") << c.name << "  expected "
       << c.expected << "  got " << c.actual << "\n";
  return os.str();
}

std::string render(const RunReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::markdown: return to_markdown(r);
    case OutputFormat::json: return to_json(r);
    case OutputFormat::plain: return to_plain(r);
  }
  return {};
}

}  // namespace oddzeta
