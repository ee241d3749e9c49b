#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "loom/conformance.hpp"

using namespace loom;

namespace fs = std::filesystem;

namespace {

std::string corpus_root() { return CORPUS_DIR; }

std::map<SourceType, int> count_by_type(const std::vector<TestCase>& cases) {
  std::map<SourceType, int> counts;
  for (const auto& c : cases) counts[c.source_type] += 1;
  return counts;
}

const TestCase& find_case(const std::vector<TestCase>& cases, const std::string& id) {
  for (const auto& c : cases) {
    if (c.id == id) return c;
  }
  REQUIRE_MESSAGE(false, "case not found: ", id);
  static TestCase unreachable;
  return unreachable;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("discovery enumerates the vendored corpus") {
  auto cases = discover(corpus_root());
  auto counts = count_by_type(cases);
  CHECK(counts[SourceType::Csv] == 39);
  CHECK(counts[SourceType::Json] == 40);
  CHECK(counts[SourceType::Xml] == 38);
  CHECK(counts[SourceType::Sparql] == 26);
  CHECK(counts[SourceType::MySql] == 60);
  CHECK(counts[SourceType::PostgreSql] == 60);
  CHECK(counts[SourceType::SqlServer] == 60);
  CHECK(cases.size() == 323);

  for (std::size_t i = 1; i < cases.size(); ++i) {
    CHECK(cases[i - 1].id < cases[i].id);
  }

  const auto& first = find_case(cases, "RMLTC0000-CSV");
  CHECK_FALSE(first.skip);
  CHECK(first.expected_output_path.has_value());
  CHECK(first.input_paths.size() == 1);

  const auto& error_case = find_case(cases, "RMLTC0002c-CSV");
  CHECK_FALSE(error_case.expected_output_path.has_value());

  for (const auto& c : cases) {
    bool external = c.source_type == SourceType::Sparql ||
                    c.source_type == SourceType::MySql ||
                    c.source_type == SourceType::PostgreSql ||
                    c.source_type == SourceType::SqlServer;
    CHECK(c.skip == external);
    if (c.skip) CHECK(c.skip_reason == "source adapter out of scope");
  }
}

TEST_CASE("discovery of an empty directory yields no cases") {
  auto dir = fs::temp_directory_path() / "loom_conformance_empty";
  fs::create_directories(dir);
  CHECK(discover(dir.string()).empty());
  CHECK_THROWS_AS(discover((dir / "missing").string()), std::runtime_error);
}

TEST_CASE("the simplest case passes and is timed") {
  auto cases = discover(corpus_root());
  RunOptions options;
  options.timing_runs = 2;
  auto result = run_case(find_case(cases, "RMLTC0000-CSV"), options);
  CHECK(result.outcome == Outcome::Pass);
  CHECK(result.mean_millis > 0.0);
}

TEST_CASE("error-expected cases pass exactly when conversion fails") {
  auto cases = discover(corpus_root());
  RunOptions options;
  options.timing_runs = 1;
  auto result = run_case(find_case(cases, "RMLTC0002c-CSV"), options);
  CHECK(result.outcome == Outcome::Pass);
  CHECK_FALSE(result.diagnostics.empty());
}

TEST_CASE("a corrupted expected file fails with a nonempty diff") {
  auto cases = discover(corpus_root());
  const auto& original = find_case(cases, "RMLTC0000-CSV");

  auto dir = fs::temp_directory_path() / "loom_conformance_corrupt" / "RMLTC0000-CSV";
  fs::create_directories(dir);
  fs::copy(original.directory, dir,
           fs::copy_options::recursive | fs::copy_options::overwrite_existing);
  {
    std::ofstream out(dir / "output.nq", std::ios::binary);
    out << "<http://example.com/Nobody> <http://example.com/p> \"wrong\" .\n";
  }

  auto corrupted = discover(dir.parent_path().string());
  RunOptions options;
  options.timing_runs = 1;
  auto result = run_case(find_case(corrupted, "RMLTC0000-CSV"), options);
  CHECK(result.outcome == Outcome::Fail);
  CHECK_FALSE(result.diagnostics.empty());
}

TEST_CASE("skipped backends never convert") {
  auto cases = discover(corpus_root());
  auto result = run_case(find_case(cases, "RMLTC0000-SPARQL"));
  CHECK(result.outcome == Outcome::Skipped);
  CHECK(result.diagnostics == "source adapter out of scope");
  CHECK(result.mean_millis == 0.0);
}

TEST_CASE("suite tallies are consistent and the full suite is green") {
  auto cases = discover(corpus_root());
  RunOptions options;
  options.timing_runs = 1;
  auto report = run_suite(cases, options);

  CHECK(report.all_green());
  for (const auto& [type, tally] : report.tallies) {
    CHECK(tally.passed + tally.failed + tally.errors + tally.skipped == tally.total);
  }
  CHECK(report.tallies.at(SourceType::Csv).passed == 39);
  CHECK(report.tallies.at(SourceType::Json).passed == 40);
  CHECK(report.tallies.at(SourceType::Xml).passed == 38);
  CHECK(report.tallies.at(SourceType::Sparql).skipped == 26);
  CHECK(report.tallies.at(SourceType::MySql).skipped == 60);
}

TEST_CASE("filtering restricts the report to the requested types") {
  auto cases = discover(corpus_root());
  RunOptions options;
  options.timing_runs = 1;
  options.filter = std::set<SourceType>{SourceType::Csv};
  auto report = run_suite(cases, options);
  CHECK(report.tallies.size() == 1);
  CHECK(report.tallies.count(SourceType::Csv) == 1);
  CHECK(report.cases.size() == 39);
}

TEST_CASE("repeated runs produce identical outcomes") {
  auto cases = discover(corpus_root());
  RunOptions options;
  options.timing_runs = 1;
  options.filter = std::set<SourceType>{SourceType::Xml};
  auto a = run_suite(cases, options);
  auto b = run_suite(cases, options);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].id == b.cases[i].id);
    CHECK(a.cases[i].outcome == b.cases[i].outcome);
  }
}

TEST_CASE("the harness does not modify corpus files") {
  auto cases = discover(corpus_root());
  const auto& probe = find_case(cases, "RMLTC0001a-CSV");
  std::string mapping_before = slurp(probe.mapping_path);
  std::string expected_before = slurp(*probe.expected_output_path);

  RunOptions options;
  options.timing_runs = 1;
  run_case(probe, options);

  CHECK(slurp(probe.mapping_path) == mapping_before);
  CHECK(slurp(*probe.expected_output_path) == expected_before);
}

TEST_CASE("report formats") {
  auto cases = discover(corpus_root());
  RunOptions options;
  options.timing_runs = 1;
  options.filter = std::set<SourceType>{SourceType::Csv, SourceType::Sparql};
  auto report = run_suite(cases, options);

  std::string table = format_report(report);
  CHECK(table.find("Source type") != std::string::npos);
  CHECK(table.find("CSV") != std::string::npos);
  CHECK(table.find("SPARQL") != std::string::npos);

  std::string machine = machine_report(report);
  CHECK(machine.find("RMLTC0000-CSV pass ") != std::string::npos);
  CHECK(machine.find("RMLTC0000-SPARQL skipped ") != std::string::npos);
  std::size_t lines = 0;
  for (char ch : machine) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 39 + 26);
}
