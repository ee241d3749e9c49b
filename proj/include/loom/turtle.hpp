#ifndef LOOM_TURTLE_HPP
#define LOOM_TURTLE_HPP

#include <optional>
#include <string>

#include "loom/rdf.hpp"

namespace loom {

class TurtleError : public Error {
 public:
  TurtleError(const std::string& msg, int line, int column)
      : Error("turtle syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
              ": " + msg),
        line(line),
        column(column) {}

  int line;
  int column;
};

class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

// Parses a Turtle document and returns its asserted triples. Prefix and base
// declarations are resolved during the parse; blank-node labels are renamed
// to fresh labels so separate parses never collide.
//
// Supported syntax: @prefix/@base and their SPARQL spellings, IRIs, prefixed
// names, `a`, predicate-object lists, object lists, blank-node property
// lists, string literals in all four quote styles, numeric and boolean
// shorthand, language tags and datatypes, comments. RDF collections are not
// supported and raise a TurtleError.
Graph parse_turtle(const std::string& text, const std::optional<Iri>& base = std::nullopt);

// RFC 3986 reference resolution, exposed for reuse by the parser and tests.
std::string resolve_iri_reference(const std::string& base, const std::string& ref);

enum class Format {
  NTriples,
  NQuads,
  Turtle,
  N3,
  TriG,
  Xml,
  PrettyXml,
  TriX,
};

// Maps the CLI spellings (nt, nquads, turtle, n3, trig, trix, xml,
// pretty-xml, plus the long names) onto Format. Unknown names -> nullopt.
std::optional<Format> format_from_name(const std::string& name);
std::string format_name(Format f);

// Serializes `g`. N-Triples/N-Quads and Turtle (with N3/TriG treated as
// Turtle documents; the engine emits no named graphs) are implemented;
// XML/PrettyXml/TriX raise UnsupportedFormatError naming the format.
// Output is deterministic: triples are emitted in sorted order.
std::string serialize(const Graph& g, Format format);

std::string to_ntriples(const Graph& g);
std::string to_turtle(const Graph& g);

}  // namespace loom

#endif  // LOOM_TURTLE_HPP
