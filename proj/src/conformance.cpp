#include "loom/conformance.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "loom/engine.hpp"
#include "loom/isomorphism.hpp"
#include "loom/turtle.hpp"

namespace loom {

namespace fs = std::filesystem;

std::string source_type_name(SourceType t) {
  switch (t) {
    case SourceType::Csv: return "CSV";
    case SourceType::Json: return "JSON";
    case SourceType::Xml: return "XML";
    case SourceType::Sparql: return "SPARQL";
    case SourceType::MySql: return "MySQL";
    case SourceType::PostgreSql: return "PostgreSQL";
    case SourceType::SqlServer: return "SQLServer";
  }
  return "?";
}

std::optional<SourceType> source_type_from_name(const std::string& name) {
  if (name == "CSV") return SourceType::Csv;
  if (name == "JSON") return SourceType::Json;
  if (name == "XML") return SourceType::Xml;
  if (name == "SPARQL") return SourceType::Sparql;
  if (name == "MySQL") return SourceType::MySql;
  if (name == "PostgreSQL") return SourceType::PostgreSql;
  if (name == "SQLServer") return SourceType::SqlServer;
  return std::nullopt;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Error: return "error";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

bool SuiteReport::all_green() const {
  for (const auto& [type, tally] : tallies) {
    if (tally.failed > 0 || tally.errors > 0) return false;
  }
  return true;
}

namespace {

bool needs_external_service(SourceType t) {
  return t == SourceType::Sparql || t == SourceType::MySql ||
         t == SourceType::PostgreSql || t == SourceType::SqlServer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<TestCase> discover(const std::string& root_dir) {
  fs::path root(root_dir);
  if (!fs::is_directory(root)) {
    throw std::runtime_error("corpus root '" + root_dir + "' is not a directory");
  }

  std::vector<TestCase> cases;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string id = entry.path().filename().string();
    if (id.rfind("RMLTC", 0) != 0) continue;

    auto dash = id.rfind('-');
    if (dash == std::string::npos) {
      throw std::runtime_error("case directory '" + id + "' has no source type suffix");
    }
    auto type = source_type_from_name(id.substr(dash + 1));
    if (!type) {
      throw std::runtime_error("case directory '" + id + "' has unknown source type '" +
                               id.substr(dash + 1) + "'");
    }

    TestCase c;
    c.id = id;
    c.directory = entry.path().string();
    c.source_type = *type;
    c.mapping_path = (entry.path() / "mapping.ttl").string();
    if (!fs::is_regular_file(c.mapping_path)) {
      throw std::runtime_error("case '" + id + "' has no mapping.ttl");
    }
    fs::path expected = entry.path() / "output.nq";
    if (fs::is_regular_file(expected)) {
      c.expected_output_path = expected.string();
    }
    for (const auto& file : fs::directory_iterator(entry.path())) {
      if (!file.is_regular_file()) continue;
      const std::string name = file.path().filename().string();
      if (name == "mapping.ttl" || name == "output.nq") continue;
      c.input_paths.push_back(file.path().string());
    }
    std::sort(c.input_paths.begin(), c.input_paths.end());
    if (needs_external_service(c.source_type)) {
      c.skip = true;
      c.skip_reason = "source adapter out of scope";
    }
    cases.push_back(std::move(c));
  }

  std::sort(cases.begin(), cases.end(),
            [](const TestCase& a, const TestCase& b) { return a.id < b.id; });
  return cases;
}

CaseResult run_case(const TestCase& c, const RunOptions& options) {
  CaseResult result;
  result.id = c.id;
  result.source_type = c.source_type;

  if (c.skip) {
    result.outcome = Outcome::Skipped;
    result.diagnostics = c.skip_reason;
    return result;
  }

  ConvertOptions convert_options;
  convert_options.mapping_path = c.mapping_path;

  const int runs = std::max(1, options.timing_runs);
  std::optional<Graph> produced;
  std::string failure;
  double total_millis = 0.0;

  for (int i = 0; i < runs; ++i) {
    auto start = std::chrono::steady_clock::now();
    try {
      Graph g = convert(convert_options);
      if (i == 0) produced = std::move(g);
    } catch (const EngineError& e) {
      if (i == 0) failure = e.what();
    }
    auto end = std::chrono::steady_clock::now();
    total_millis += std::chrono::duration<double, std::milli>(end - start).count();
  }
  result.mean_millis = total_millis / runs;

  if (c.expected_output_path) {
    if (!produced) {
      result.outcome = Outcome::Error;
      result.diagnostics = failure;
      return result;
    }
    Graph expected;
    try {
      expected = parse_turtle(read_file(*c.expected_output_path));
    } catch (const std::exception& e) {
      result.outcome = Outcome::Error;
      result.diagnostics = std::string("expected output unreadable: ") + e.what();
      return result;
    }
    if (isomorphic(*produced, expected)) {
      result.outcome = Outcome::Pass;
    } else {
      result.outcome = Outcome::Fail;
      result.diagnostics = describe_difference(*produced, expected);
    }
    return result;
  }

  // No expected output: the case passes exactly when conversion fails.
  if (!produced) {
    result.outcome = Outcome::Pass;
    result.diagnostics = failure;
  } else {
    result.outcome = Outcome::Fail;
    result.diagnostics = "expected a conversion error, produced " +
                         std::to_string(produced->size()) + " triples";
  }
  return result;
}

SuiteReport run_suite(const std::vector<TestCase>& cases, const RunOptions& options) {
  SuiteReport report;
  for (const auto& c : cases) {
    if (options.filter && !options.filter->count(c.source_type)) continue;
    CaseResult r = run_case(c, options);
    auto& tally = report.tallies[c.source_type];
    tally.total += 1;
    switch (r.outcome) {
      case Outcome::Pass: tally.passed += 1; break;
      case Outcome::Fail: tally.failed += 1; break;
      case Outcome::Error: tally.errors += 1; break;
      case Outcome::Skipped: tally.skipped += 1; break;
    }
    report.cases.push_back(std::move(r));
  }
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(13) << "Source type" << std::right << std::setw(8)
      << "Passed" << std::setw(8) << "Failed" << std::setw(8) << "Errors" << std::setw(9)
      << "Skipped" << std::setw(7) << "Total" << "\n";
  for (const auto& [type, tally] : report.tallies) {
    out << std::left << std::setw(13) << source_type_name(type) << std::right
        << std::setw(8) << tally.passed << std::setw(8) << tally.failed << std::setw(8)
        << tally.errors << std::setw(9) << tally.skipped << std::setw(7) << tally.total
        << "\n";
  }
  for (const auto& r : report.cases) {
    if (r.outcome == Outcome::Pass || r.outcome == Outcome::Skipped) continue;
    out << "\n" << r.id << " " << outcome_name(r.outcome) << "\n";
    if (!r.diagnostics.empty()) out << r.diagnostics << "\n";
  }
  return out.str();
}

std::string machine_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& r : report.cases) {
    out << r.id << " " << outcome_name(r.outcome) << " " << std::fixed
        << std::setprecision(3) << r.mean_millis << "\n";
  }
  return out.str();
}

}  // namespace loom
