#ifndef LOOM_RDF_HPP
#define LOOM_RDF_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace loom {

// Base class for all errors raised by the library. The `what()` string is a
// single human-readable line; callers that need machine-readable phases wrap
// it (see engine::ConvertError).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class RdfError : public Error {
 public:
  using Error::Error;
};

// An absolute IRI. Construction validates that a scheme is present and that
// the string contains no characters forbidden in IRIs (whitespace, angle
// brackets, braces, quotes, control characters). Bytes >= 0x80 are allowed
// raw, IRIs are Unicode-capable.
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& str() const { return value_; }

  // True if `value` would be accepted by the constructor.
  static bool valid(const std::string& value);

  friend bool operator==(const Iri& a, const Iri& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Iri& a, const Iri& b) { return a.value_ != b.value_; }
  friend bool operator<(const Iri& a, const Iri& b) { return a.value_ < b.value_; }

 private:
  std::string value_;
};

// A blank node. Labels are only meaningful within one graph's label space;
// graph isomorphism treats them as existential variables.
class BlankNode {
 public:
  explicit BlankNode(std::string label);

  const std::string& label() const { return label_; }

  friend bool operator==(const BlankNode& a, const BlankNode& b) { return a.label_ == b.label_; }
  friend bool operator!=(const BlankNode& a, const BlankNode& b) { return a.label_ != b.label_; }
  friend bool operator<(const BlankNode& a, const BlankNode& b) { return a.label_ < b.label_; }

 private:
  std::string label_;
};

// An RDF literal: lexical form plus datatype, or lexical form plus language
// tag (in which case the datatype is rdf:langString). Language tags compare
// case-insensitively.
class Literal {
 public:
  // Plain literal, datatype xsd:string.
  explicit Literal(std::string lexical);
  // Typed literal.
  Literal(std::string lexical, Iri datatype);
  // Language-tagged literal; datatype is forced to rdf:langString.
  static Literal tagged(std::string lexical, std::string language);

  const std::string& lexical() const { return lexical_; }
  const Iri& datatype() const { return datatype_; }
  const std::optional<std::string>& language() const { return language_; }

  friend bool operator==(const Literal& a, const Literal& b);
  friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }
  friend bool operator<(const Literal& a, const Literal& b);

 private:
  Literal(std::string lexical, Iri datatype, std::optional<std::string> language);

  std::string lexical_;
  Iri datatype_;
  std::optional<std::string> language_;  // original case kept; compared folded
};

// Subject/predicate positions restrict which kinds may appear; `Resource`
// covers subject position (IRI or blank node), `Term` any position.
using Resource = std::variant<Iri, BlankNode>;
using Term = std::variant<Iri, BlankNode, Literal>;

Resource to_resource(const Term& t);  // throws RdfError if t is a Literal
Term to_term(const Resource& r);

bool is_iri(const Term& t);
bool is_blank(const Term& t);
bool is_literal(const Term& t);

struct Triple {
  Resource subject;
  Iri predicate;
  Term object;

  friend bool operator==(const Triple& a, const Triple& b);
  friend bool operator<(const Triple& a, const Triple& b);
};

// An RDF graph: an unordered set of triples. Inserting a duplicate leaves the
// size unchanged. Instances are cheap to copy and safe to share between
// threads once no more insertions happen.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  void insert(Triple t) { triples_.insert(std::move(t)); }
  void insert(Resource s, Iri p, Term o);
  void merge(const Graph& other);

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(const Triple& t) const { return triples_.count(t) > 0; }

  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }

  // Simple pattern queries; std::nullopt matches anything.
  std::vector<Term> objects_of(const Resource& s, const Iri& p) const;
  std::optional<Term> object_of(const Resource& s, const Iri& p) const;  // unique or nullopt
  std::vector<Resource> subjects_of(const Iri& p, const Term& o) const;
  std::vector<Resource> subjects_with(const Iri& p) const;
  bool has(const Resource& s, const Iri& p) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

 private:
  std::set<Triple> triples_;
};

// Debug/display form of one term: <iri>, _:label, or "lexical"^^<dt> / @tag.
std::string term_to_string(const Term& t);
std::string triple_to_string(const Triple& t);

// Well-known vocabulary IRIs used across the engine.
namespace vocab {

inline const std::string RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string RDFS = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string XSD = "http://www.w3.org/2001/XMLSchema#";
inline const std::string RR = "http://www.w3.org/ns/r2rml#";
inline const std::string RML = "http://semweb.mmlab.be/ns/rml#";
inline const std::string QL = "http://semweb.mmlab.be/ns/ql#";
inline const std::string FNML = "http://semweb.mmlab.be/ns/fnml#";
inline const std::string FNO = "https://w3id.org/function/ontology#";
inline const std::string D2RQ = "http://www.wiwiss.fu-berlin.de/suhl/bizer/D2RQ/0.1#";
inline const std::string SD = "http://www.w3.org/ns/sparql-service-description#";

inline Iri rdf_type() { return Iri(RDF + "type"); }
inline Iri rdf_lang_string() { return Iri(RDF + "langString"); }
inline Iri xsd_string() { return Iri(XSD + "string"); }
inline Iri xsd_integer() { return Iri(XSD + "integer"); }
inline Iri xsd_decimal() { return Iri(XSD + "decimal"); }
inline Iri xsd_double() { return Iri(XSD + "double"); }
inline Iri xsd_boolean() { return Iri(XSD + "boolean"); }

}  // namespace vocab

}  // namespace loom

#endif  // LOOM_RDF_HPP
