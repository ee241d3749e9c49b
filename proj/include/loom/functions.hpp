#ifndef LOOM_FUNCTIONS_HPP
#define LOOM_FUNCTIONS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loom/rdf.hpp"

namespace loom {

class FunctionError : public Error {
 public:
  using Error::Error;
};

// A function is identified by IRI and declares its parameters in the order
// the callable expects them. Callables work on strings: the registry
// resolves parameter IRIs to positions, and a null argument short-circuits
// to a null result before the callable runs.
struct FunctionSignature {
  Iri function_iri;
  std::vector<Iri> parameters;
};

using FunctionCallable =
    std::function<std::optional<std::string>(const std::vector<std::string>&)>;

class FunctionRegistry {
 public:
  // Returns true when an existing registration was replaced.
  bool register_function(FunctionSignature signature, FunctionCallable callable);

  bool has(const Iri& function_iri) const;

  // Arguments are keyed by parameter IRI. Unknown functions and missing
  // parameters raise FunctionError; a null argument yields a null result.
  std::optional<std::string> invoke(
      const Iri& function_iri,
      const std::map<std::string, std::optional<std::string>>& arguments) const;

 private:
  struct Entry {
    FunctionSignature signature;
    FunctionCallable callable;
  };
  std::map<std::string, Entry> entries_;
};

// Registry preloaded with the built-in string transforms (lower/upper case,
// trim, escape). Case mapping is ASCII-only.
FunctionRegistry builtin_suite();

namespace vocab {
inline const std::string GREL = "http://users.ugent.be/~bjdmeest/function/grel.ttl#";
}

}  // namespace loom

#endif  // LOOM_FUNCTIONS_HPP
