#include "loom/rdf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace loom {

namespace {

bool valid_scheme(const std::string& s, std::size_t colon) {
  if (colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = s[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return true;
}

std::string fold_lang(const std::string& tag) {
  std::string out = tag;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

bool Iri::valid(const std::string& value) {
  std::size_t colon = value.find(':');
  if (colon == std::string::npos || !valid_scheme(value, colon)) return false;
  for (unsigned char c : value) {
    if (c <= 0x20) return false;  // control chars and space
    switch (c) {
      case '<':
      case '>':
      case '"':
      case '{':
      case '}':
      case '|':
      case '^':
      case '`':
      case '\\':
        return false;
      default:
        break;
    }
  }
  return true;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!valid(value_)) {
    throw RdfError("invalid absolute IRI: '" + value_ + "'");
  }
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (label_.empty()) {
    throw RdfError("blank node label must not be empty");
  }
}

Literal::Literal(std::string lexical)
    : Literal(std::move(lexical), vocab::xsd_string(), std::nullopt) {}

Literal::Literal(std::string lexical, Iri datatype)
    : Literal(std::move(lexical), std::move(datatype), std::nullopt) {}

Literal Literal::tagged(std::string lexical, std::string language) {
  if (language.empty()) {
    throw RdfError("language tag must not be empty");
  }
  return Literal(std::move(lexical), vocab::rdf_lang_string(), std::move(language));
}

Literal::Literal(std::string lexical, Iri datatype, std::optional<std::string> language)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)), language_(std::move(language)) {
  if (language_ && datatype_ != vocab::rdf_lang_string()) {
    throw RdfError("language-tagged literal must have datatype rdf:langString");
  }
}

bool operator==(const Literal& a, const Literal& b) {
  if (a.lexical_ != b.lexical_ || a.datatype_ != b.datatype_) return false;
  if (a.language_.has_value() != b.language_.has_value()) return false;
  if (!a.language_) return true;
  return fold_lang(*a.language_) == fold_lang(*b.language_);
}

bool operator<(const Literal& a, const Literal& b) {
  std::string la = a.language_ ? fold_lang(*a.language_) : std::string();
  std::string lb = b.language_ ? fold_lang(*b.language_) : std::string();
  return std::tie(a.lexical_, a.datatype_, la) < std::tie(b.lexical_, b.datatype_, lb);
}

Resource to_resource(const Term& t) {
  if (const auto* i = std::get_if<Iri>(&t)) return *i;
  if (const auto* b = std::get_if<BlankNode>(&t)) return *b;
  throw RdfError("literal cannot appear in subject or predicate position");
}

Term to_term(const Resource& r) {
  if (const auto* i = std::get_if<Iri>(&r)) return *i;
  return std::get<BlankNode>(r);
}

bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }

namespace {

int kind_rank(const Term& t) { return static_cast<int>(t.index()); }
int kind_rank(const Resource& r) { return static_cast<int>(r.index()); }

template <typename V>
int compare_nodes(const V& a, const V& b) {
  if (kind_rank(a) != kind_rank(b)) return kind_rank(a) < kind_rank(b) ? -1 : 1;
  bool less = a < b;
  bool greater = b < a;
  if (less) return -1;
  if (greater) return 1;
  return 0;
}

}  // namespace

bool operator==(const Triple& a, const Triple& b) {
  return a.subject == b.subject && a.predicate == b.predicate && a.object == b.object;
}

bool operator<(const Triple& a, const Triple& b) {
  int c = compare_nodes(a.subject, b.subject);
  if (c != 0) return c < 0;
  if (a.predicate != b.predicate) return a.predicate < b.predicate;
  return compare_nodes(a.object, b.object) < 0;
}

void Graph::insert(Resource s, Iri p, Term o) {
  triples_.insert(Triple{std::move(s), std::move(p), std::move(o)});
}

void Graph::merge(const Graph& other) {
  for (const auto& t : other.triples_) triples_.insert(t);
}

std::vector<Term> Graph::objects_of(const Resource& s, const Iri& p) const {
  std::vector<Term> out;
  for (const auto& t : triples_) {
    if (t.subject == s && t.predicate == p) out.push_back(t.object);
  }
  return out;
}

std::optional<Term> Graph::object_of(const Resource& s, const Iri& p) const {
  auto all = objects_of(s, p);
  if (all.size() == 1) return all.front();
  return std::nullopt;
}

std::vector<Resource> Graph::subjects_of(const Iri& p, const Term& o) const {
  std::vector<Resource> out;
  for (const auto& t : triples_) {
    if (t.predicate == p && t.object == o) out.push_back(t.subject);
  }
  return out;
}

std::vector<Resource> Graph::subjects_with(const Iri& p) const {
  std::vector<Resource> out;
  for (const auto& t : triples_) {
    if (t.predicate == p) {
      if (std::find(out.begin(), out.end(), t.subject) == out.end()) out.push_back(t.subject);
    }
  }
  return out;
}

bool Graph::has(const Resource& s, const Iri& p) const {
  for (const auto& t : triples_) {
    if (t.subject == s && t.predicate == p) return true;
  }
  return false;
}

std::string term_to_string(const Term& t) {
  std::ostringstream os;
  if (const auto* i = std::get_if<Iri>(&t)) {
    os << '<' << i->str() << '>';
  } else if (const auto* b = std::get_if<BlankNode>(&t)) {
    os << "_:" << b->label();
  } else {
    const auto& l = std::get<Literal>(t);
    os << '"' << l.lexical() << '"';
    if (l.language()) {
      os << '@' << *l.language();
    } else if (l.datatype() != vocab::xsd_string()) {
      os << "^^<" << l.datatype().str() << '>';
    }
  }
  return os.str();
}

std::string triple_to_string(const Triple& t) {
  return term_to_string(to_term(t.subject)) + " <" + t.predicate.str() + "> " +
         term_to_string(t.object) + " .";
}

}  // namespace loom
