#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loom {

// Entry point for the mapper command line. `args` excludes the program
// name. Output (or the file named by -o) receives the serialized graph;
// diagnostics go to `err`. Returns the process exit code: 0 on success,
// 1 when conversion or serialization fails, 2 on argument errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace loom
