#ifndef LOOM_ENGINE_HPP
#define LOOM_ENGINE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loom/functions.hpp"
#include "loom/mapping.hpp"
#include "loom/rdf.hpp"
#include "loom/sources.hpp"

namespace loom {

// Where in the pipeline a conversion failed. Rendering covers reading the
// mapping file and substituting document variables; parsing is Turtle;
// modeling is mapping construction and validation; execution is row
// processing.
enum class Phase { Render, Parse, Model, Execute };

std::string phase_name(Phase phase);

class EngineError : public Error {
 public:
  EngineError(Phase phase, const std::string& msg)
      : Error(phase_name(phase) + " error: " + msg), phase_(phase) {}

  Phase phase() const { return phase_; }

 private:
  Phase phase_;
};

// Substitutes {{ NAME }} document variables. Placeholders must be bound;
// anything that is not a complete {{ ... }} group is left untouched, so
// single-brace term templates pass through unchanged.
std::string render_template(const std::string& text,
                            const std::map<std::string, std::string>& variables);

// Expands a {name} term template at an IRI position: substituted values are
// percent-encoded (unreserved ASCII and all bytes >= 0x80 pass through),
// static template text is kept verbatim. \{ and \} escape literal braces.
std::string expand_iri_template(const std::string& template_text,
                                const std::map<std::string, std::string>& values);

enum class TermPosition { Subject, Predicate, Object, Graph };

// Everything needed to evaluate one term map against one row. mint_scope
// keys deterministic blank node labels: the node for row N is
// "<mint_scope>_rN".
struct RowContext {
  const Frame& frame;
  std::size_t row;
  std::string mint_scope;
  std::string base_iri;
};

// Produces the term for one row, or nothing when a referenced value is
// null. The position fixes the default term type: subjects, predicates, and
// graphs default to IRIs; objects default to literals when the map uses a
// reference, language, or datatype, and to IRIs otherwise.
std::optional<Term> evaluate_term_map(const TermGenerationSpec& spec, TermPosition position,
                                      const RowContext& context);

// Row-at-a-time evaluation over a whole frame. The template is compiled
// once up front; results are positionally aligned with frame rows and agree
// with evaluate_term_map on every row.
std::vector<std::optional<Term>> evaluate_term_map_batch(const TermGenerationSpec& spec,
                                                         TermPosition position,
                                                         const Frame& frame,
                                                         const std::string& mint_scope,
                                                         const std::string& base_iri);

// All (child row, parent row) index pairs satisfying every join condition.
// Condition values must be equal as raw strings and non-null on both sides;
// an empty condition list yields the full cross product.
std::vector<std::pair<std::size_t, std::size_t>> execute_join(
    const Frame& child, const Frame& parent,
    const std::vector<std::pair<std::string, std::string>>& conditions);

struct EngineConfig {
  std::string base_iri = "http://example.com/base/";
  std::string source_root;  // directory for resolving relative file locations
};

// Runs one triples map of the document, identified by ordinal so that
// minted blank node labels are stable across runs and across threads.
Graph execute_triples_map(const MappingDocument& doc, std::size_t ordinal,
                          FrameResolver& resolver, const FunctionRegistry& registry,
                          const EngineConfig& config);

struct ConvertOptions {
  std::string mapping_path;
  std::map<std::string, std::string> variables;
  std::optional<std::string> base_iri;
  bool parallel = false;
};

// Full pipeline: read and render the mapping, parse it, build and validate
// the model, execute every triples map, and merge the results. Errors carry
// the failing phase; execution errors name the triples map and row.
Graph convert(const ConvertOptions& options, FrameResolver& resolver,
              const FunctionRegistry& registry);

// Convenience form with a fresh resolver and the built-in function suite.
Graph convert(const ConvertOptions& options);

}  // namespace loom

#endif  // LOOM_ENGINE_HPP
