#include "loom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

#include "loom/engine.hpp"
#include "loom/turtle.hpp"

namespace loom {

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Executes an RML mapping document against its data sources"};
  app.name("graphloom");

  std::string input;
  std::string out_path;
  std::string format_arg = "nt";
  bool parallel = false;
  std::vector<std::string> var_specs;

  app.add_option("input", input, "Mapping document (Turtle)")->required();
  app.add_option("-o", out_path, "Write the graph to this file instead of standard output");
  app.add_option("-f", format_arg,
                 "Serialization format: n3, nquads, nt, pretty-xml, trig, trix, turtle, xml")
      ->capture_default_str();
  app.add_flag("-m", parallel, "Run triples maps in parallel");
  app.add_option("--var", var_specs, "Template variable binding NAME=VALUE (repeatable)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "graphloom: " << e.what() << "\n";
    return 2;
  }

  auto format = format_from_name(format_arg);
  if (!format) {
    err << "graphloom: unknown serialization format '" << format_arg << "'\n";
    return 2;
  }

  ConvertOptions options;
  options.mapping_path = input;
  options.parallel = parallel;
  for (const auto& spec : var_specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      err << "graphloom: --var expects NAME=VALUE, got '" << spec << "'\n";
      return 2;
    }
    options.variables[spec.substr(0, eq)] = spec.substr(eq + 1);
  }

  std::string output;
  try {
    output = serialize(convert(options), *format);
  } catch (const Error& e) {
    err << "graphloom: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    out << output;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "graphloom: cannot write '" << out_path << "'\n";
    return 1;
  }
  file << output;
  return 0;
}

}  // namespace loom
