#ifndef LOOM_MAPPING_HPP
#define LOOM_MAPPING_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "loom/rdf.hpp"
#include "loom/sources.hpp"

namespace loom {

class MappingError : public Error {
 public:
  using Error::Error;
};

enum class TermKind { Iri, BlankNode, Literal };

// One term-generation rule: a constant, a data reference, or a string
// template, plus the annotations that control the produced term. Exactly one
// of constant/reference/template must be set for the rule to be valid;
// validate() reports violations.
struct TermGenerationSpec {
  std::string id;  // node label, used in diagnostics
  std::optional<Term> constant;
  std::optional<std::string> reference;
  std::optional<std::string> template_text;
  std::optional<TermKind> term_type;
  std::optional<Iri> datatype;
  std::optional<std::string> language;
  std::optional<std::string> language_reference;  // tag taken from a data column

  int value_source_count() const {
    return (constant ? 1 : 0) + (reference ? 1 : 0) + (template_text ? 1 : 0);
  }
};

// Declarative function call: which function to run and how to fill its
// parameters from the current row.
struct FunctionMapSpec {
  std::string id;
  Iri function_iri;
  std::vector<std::pair<Iri, TermGenerationSpec>> bindings;
  std::optional<TermKind> term_type;
  std::optional<Iri> datatype;
  std::optional<std::string> language;
};

// Object map whose values are subjects produced by another triples map,
// restricted to parent rows matching all join conditions. An empty join
// list matches every parent row.
struct RefObjectMapSpec {
  std::string id;
  std::string parent_id;  // node id of the parent triples map
  std::vector<std::pair<std::string, std::string>> joins;  // (child, parent)
};

using ObjectSpec = std::variant<TermGenerationSpec, FunctionMapSpec, RefObjectMapSpec>;

struct SubjectMap {
  std::string id;
  TermGenerationSpec spec;
  std::vector<Iri> classes;
  std::vector<TermGenerationSpec> graph_maps;
};

struct PredicateObjectMap {
  std::string id;
  std::vector<TermGenerationSpec> predicates;
  std::vector<ObjectSpec> objects;
  std::vector<TermGenerationSpec> graph_maps;
};

struct TriplesMap {
  std::string id;
  bool id_is_blank = false;
  LogicalSourceDescriptor logical_source;
  SubjectMap subject_map;
  std::vector<PredicateObjectMap> predicate_object_maps;

  // Verbatim triples describing a non-file source (database descriptions,
  // service descriptions), kept so the mapping re-serializes faithfully.
  std::vector<Triple> source_details;
  std::optional<Term> source_node;  // object of rml:source when not a literal
};

struct MappingDocument {
  std::vector<TriplesMap> triples_maps;  // sorted by id for determinism

  const TriplesMap* find(const std::string& id) const;
  std::size_t ordinal_of(const std::string& id) const;
};

// Rewrites a mapping graph into canonical shape: constant shortcut
// properties (rr:subject, rr:predicate, rr:object, rr:graph) become
// constant-valued maps, rr:column becomes rml:reference, and the implied
// rdf:type statements for map nodes are materialized. Idempotent.
Graph normalize(const Graph& g);

// Subjects that look like triples maps: anything with a logical source.
std::vector<Resource> triples_map_roots(const Graph& g);

// Builds the model for one triples map. The graph is normalized internally,
// so callers may pass a raw parsed mapping. Structural problems (missing
// subject map, missing logical source, conflicting value sources, dangling
// parent references) raise MappingError.
TriplesMap triples_map_from_rdf(const Graph& g, const Resource& root);

// Emits the model back as RDF in the same canonical shape normalize()
// produces, so parse -> build -> emit is isomorphic to the normalized
// original.
Graph triples_map_to_rdf(const TriplesMap& m);

// Static well-formedness diagnostics; empty means valid. Each entry names
// the offending node and the violated rule.
std::vector<std::string> validate(const TriplesMap& m);

// All triples maps of a document, normalized, built, and sorted by id.
MappingDocument parse_mapping_document(const Graph& g);

// The portion of a normalized mapping graph that describes one triples map:
// everything reachable over mapping vocabulary edges, not crossing into
// parent triples maps. This is exactly the set of statements
// triples_map_to_rdf reproduces.
Graph induced_mapping_subgraph(const Graph& normalized, const Resource& root);

}  // namespace loom

#endif  // LOOM_MAPPING_HPP
