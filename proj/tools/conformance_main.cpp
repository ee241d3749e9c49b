#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "loom/conformance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Runs the vendored RML test-case corpus against the engine"};
  app.name("graphloom-conformance");

  std::string root = "tests/corpus/test-cases";
  std::vector<std::string> filter_names;
  int runs = 10;
  bool machine = false;

  app.add_option("root", root, "Corpus directory (one subdirectory per case)")
      ->capture_default_str();
  app.add_option("--filter", filter_names,
                 "Only run these source types (CSV, JSON, XML, SPARQL, MySQL, "
                 "PostgreSQL, SQLServer); repeatable");
  app.add_option("--runs", runs, "Conversions per case for the timing mean")
      ->capture_default_str();
  app.add_flag("--machine", machine, "Also print one 'id outcome millis' line per case");

  CLI11_PARSE(app, argc, argv);

  loom::RunOptions options;
  options.timing_runs = runs;
  if (!filter_names.empty()) {
    std::set<loom::SourceType> filter;
    for (const auto& name : filter_names) {
      auto type = loom::source_type_from_name(name);
      if (!type) {
        std::cerr << "graphloom-conformance: unknown source type '" << name << "'\n";
        return 2;
      }
      filter.insert(*type);
    }
    options.filter = filter;
  }

  try {
    auto cases = loom::discover(root);
    auto report = loom::run_suite(cases, options);
    std::cout << loom::format_report(report);
    if (machine) std::cout << "\n" << loom::machine_report(report);
    return report.all_green() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "graphloom-conformance: " << e.what() << "\n";
    return 2;
  }
}
