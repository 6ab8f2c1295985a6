#include <doctest.h>

#include <json.hpp>

#include "../test_util.hpp"
#include "oddzeta/report.hpp"

using namespace oddzeta;
using json = nlohmann::json;

namespace {
RunReport sample() {
  RunReport r;
  r.command = "compute";
  r.inputs = {{"n", "1"}, {"digits", "9"}};
  r.outputs = {{"zeta(3)", "1.202056903"}};
  r.certified_error = "1.0E(-9)";
  r.elapsed_ms = 12.5;
  r.checks = {{"a", "pass", "1", "1"}, {"b", "erratum", "2", "3"}, {"c", "fail", "4", "5"}};
  ReportTable t;
  t.title = "T";
  t.headers = {"x", "y"};
  t.rows = {{"1", "2"}};
  t.checks = {{0, 1, "2", "2", "match"}};
  r.tables.push_back(t);
  r.notes = {"note"};
  return r;
}
}  // namespace

TEST_CASE("failures count only failed checks") {
  CHECK(sample().failures() == 1);
  CHECK(check_ok(sample().checks[1]));
  CHECK_FALSE(check_ok(sample().checks[2]));
}

TEST_CASE("JSON layout") {
  const json j = json::parse(to_json(sample()));
  CHECK(j["command"] == "compute");
  CHECK(j["inputs"]["digits"] == "9");
  CHECK(j["outputs"]["zeta(3)"] == "1.202056903");
  CHECK(j["certified_error"] == "1.0E(-9)");
  CHECK(j["elapsed_ms"] == "12.5");
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][1]["status"] == "erratum");
  CHECK(j["tables"][0]["cells"][0]["column"] == "y");
  CHECK(j["notes"][0] == "note");
}

TEST_CASE("canonical JSON ignores timing") {
  RunReport a = sample();
  RunReport b = sample();
  b.elapsed_ms = 999;
  CHECK(to_json(a, true) == to_json(b, true));
  CHECK(to_json(a, false) != to_json(b, false));
  CHECK_FALSE(json::parse(to_json(a, true)).contains("elapsed_ms"));
}

TEST_CASE("markdown and plain text") {
  const std::string md = to_markdown(sample());
  CHECK(md.find("| x | y |") != std::string::npos);
  CHECK(md.find("1.202056903") != std::string::npos);
  const std::string plain = to_plain(sample());
  CHECK(plain.find("zeta(3)") != std::string::npos);
  CHECK(render(sample(), OutputFormat::plain) == plain);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(test_util::error_kind_of([] { parse_format("xml"); }) == ErrorKind::invalid_argument);
}
