#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace loom {

enum class SourceType { Csv, Json, Xml, Sparql, MySql, PostgreSql, SqlServer };

std::string source_type_name(SourceType t);
std::optional<SourceType> source_type_from_name(const std::string& name);

// One corpus entry: a directory holding mapping.ttl, the input resources,
// and output.nq when the case expects a graph (absent when it expects the
// conversion to fail).
struct TestCase {
  std::string id;
  std::string directory;
  std::string mapping_path;
  std::vector<std::string> input_paths;
  std::optional<std::string> expected_output_path;
  SourceType source_type = SourceType::Csv;
  bool skip = false;
  std::string skip_reason;
};

enum class Outcome { Pass, Fail, Error, Skipped };

std::string outcome_name(Outcome o);

struct CaseResult {
  std::string id;
  SourceType source_type = SourceType::Csv;
  Outcome outcome = Outcome::Error;
  std::string diagnostics;
  double mean_millis = 0.0;
};

struct TypeTally {
  int passed = 0;
  int failed = 0;
  int errors = 0;
  int skipped = 0;
  int total = 0;
};

struct SuiteReport {
  std::vector<CaseResult> cases;
  std::map<SourceType, TypeTally> tallies;
  bool all_green() const;
};

struct RunOptions {
  // Conversions per case when measuring; the mean wall time is reported.
  int timing_runs = 10;
  std::optional<std::set<SourceType>> filter;
};

// Enumerates RMLTC* directories under root_dir, sorted by case id. Cases
// whose backend needs an external service (SPARQL and the SQL dialects)
// are marked skip with the reason recorded. Throws std::runtime_error if
// the root does not exist or a case directory lacks its mapping.
std::vector<TestCase> discover(const std::string& root_dir);

CaseResult run_case(const TestCase& c, const RunOptions& options = {});
SuiteReport run_suite(const std::vector<TestCase>& cases, const RunOptions& options = {});

// Per-type tally table plus diagnostics for every non-passing case.
std::string format_report(const SuiteReport& report);

// One line per case: "<id> <outcome> <mean millis>".
std::string machine_report(const SuiteReport& report);

}  // namespace loom
