#include "loom/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace loom {

namespace {

// ---------------------------------------------------------------------------
// RFC 3986 reference resolution
// ---------------------------------------------------------------------------

struct IriParts {
  std::string scheme;
  std::string authority;
  std::string path;
  std::string query;
  std::string fragment;
  bool has_scheme = false;
  bool has_authority = false;
  bool has_query = false;
  bool has_fragment = false;
};

IriParts split_iri(const std::string& s) {
  IriParts p;
  std::size_t pos = 0;
  std::size_t colon = s.find(':');
  if (colon != std::string::npos && colon > 0) {
    bool ok = std::isalpha(static_cast<unsigned char>(s[0])) != 0;
    for (std::size_t i = 1; ok && i < colon; ++i) {
      char c = s[i];
      ok = std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
    }
    // A colon inside a path segment (e.g. "a/b:c") is not a scheme separator.
    if (ok && s.find('/') != std::string::npos && s.find('/') < colon) ok = false;
    if (ok) {
      p.has_scheme = true;
      p.scheme = s.substr(0, colon);
      pos = colon + 1;
    }
  }
  if (s.compare(pos, 2, "//") == 0) {
    p.has_authority = true;
    std::size_t end = s.find_first_of("/?#", pos + 2);
    if (end == std::string::npos) end = s.size();
    p.authority = s.substr(pos + 2, end - pos - 2);
    pos = end;
  }
  std::size_t qmark = s.find('?', pos);
  std::size_t hash = s.find('#', pos);
  std::size_t path_end = std::min(qmark == std::string::npos ? s.size() : qmark,
                                  hash == std::string::npos ? s.size() : hash);
  p.path = s.substr(pos, path_end - pos);
  if (qmark != std::string::npos && (hash == std::string::npos || qmark < hash)) {
    p.has_query = true;
    std::size_t qend = hash == std::string::npos ? s.size() : hash;
    p.query = s.substr(qmark + 1, qend - qmark - 1);
  }
  if (hash != std::string::npos) {
    p.has_fragment = true;
    p.fragment = s.substr(hash + 1);
  }
  return p;
}

std::string remove_dot_segments(const std::string& path) {
  std::string input = path;
  std::string output;
  while (!input.empty()) {
    if (input.rfind("../", 0) == 0) {
      input.erase(0, 3);
    } else if (input.rfind("./", 0) == 0) {
      input.erase(0, 2);
    } else if (input.rfind("/./", 0) == 0) {
      input.erase(0, 2);
    } else if (input == "/.") {
      input = "/";
    } else if (input.rfind("/../", 0) == 0 || input == "/..") {
      input.erase(0, input == "/.." ? 3 : 3);
      if (input.empty()) input = "/";
      std::size_t slash = output.find_last_of('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      std::size_t next = input.find('/', 1);
      if (next == std::string::npos) next = input.size();
      output += input.substr(0, next);
      input.erase(0, next);
    }
  }
  return output;
}

std::string join_parts(const IriParts& p) {
  std::string out;
  if (p.has_scheme) out += p.scheme + ":";
  if (p.has_authority) out += "//" + p.authority;
  out += p.path;
  if (p.has_query) out += "?" + p.query;
  if (p.has_fragment) out += "#" + p.fragment;
  return out;
}

}  // namespace

std::string resolve_iri_reference(const std::string& base, const std::string& ref) {
  IriParts r = split_iri(ref);
  if (r.has_scheme) {
    r.path = remove_dot_segments(r.path);
    return join_parts(r);
  }
  IriParts b = split_iri(base);
  IriParts t;
  t.has_scheme = b.has_scheme;
  t.scheme = b.scheme;
  if (r.has_authority) {
    t.has_authority = true;
    t.authority = r.authority;
    t.path = remove_dot_segments(r.path);
    t.has_query = r.has_query;
    t.query = r.query;
  } else {
    t.has_authority = b.has_authority;
    t.authority = b.authority;
    if (r.path.empty()) {
      t.path = b.path;
      t.has_query = r.has_query ? true : b.has_query;
      t.query = r.has_query ? r.query : b.query;
    } else {
      if (r.path[0] == '/') {
        t.path = remove_dot_segments(r.path);
      } else if (b.has_authority && b.path.empty()) {
        t.path = remove_dot_segments("/" + r.path);
      } else {
        std::size_t slash = b.path.find_last_of('/');
        std::string merged =
            slash == std::string::npos ? r.path : b.path.substr(0, slash + 1) + r.path;
        t.path = remove_dot_segments(merged);
      }
      t.has_query = r.has_query;
      t.query = r.query;
    }
  }
  t.has_fragment = r.has_fragment;
  t.fragment = r.fragment;
  return join_parts(t);
}

namespace {

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

void append_utf8(std::string& out, unsigned cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class TurtleParser {
 public:
  TurtleParser(const std::string& text, const std::optional<Iri>& base) : text_(text) {
    if (base) base_ = base->str();
  }

  Graph parse() {
    skip_ws();
    while (!at_end()) {
      parse_statement();
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw TurtleError(msg, line_, column()); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      line_start_ = pos_;
    }
    return c;
  }

  int column() const { return static_cast<int>(pos_ - line_start_) + 1; }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  bool match_char(char c) {
    if (!at_end() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect_char(char c) {
    if (!match_char(c)) {
      fail(std::string("expected '") + c + "'" +
           (at_end() ? " but reached end of input" : std::string(" but found '") + peek() + "'"));
    }
  }

  bool match_keyword(const std::string& kw) {
    // Case-insensitive match for SPARQL-style directives.
    if (pos_ + kw.size() > text_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(text_[pos_ + i])) !=
          std::tolower(static_cast<unsigned char>(kw[i]))) {
        return false;
      }
    }
    char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
    if (std::isalnum(static_cast<unsigned char>(after)) || after == '_') return false;
    for (std::size_t i = 0; i < kw.size(); ++i) advance();
    return true;
  }

  void parse_statement() {
    if (peek() == '@') {
      advance();
      if (match_keyword("prefix")) {
        parse_prefix_directive(true);
      } else if (match_keyword("base")) {
        parse_base_directive(true);
      } else {
        fail("unknown directive");
      }
      return;
    }
    if (match_keyword("PREFIX")) {
      parse_prefix_directive(false);
      return;
    }
    if (match_keyword("BASE")) {
      parse_base_directive(false);
      return;
    }
    parse_triples();
  }

  void parse_prefix_directive(bool turtle_style) {
    skip_ws();
    std::string prefix = parse_pname_ns();
    skip_ws();
    std::string iri = parse_iri_ref();
    prefixes_[prefix] = iri;
    if (turtle_style) {
      skip_ws();
      expect_char('.');
    }
  }

  void parse_base_directive(bool turtle_style) {
    skip_ws();
    base_ = parse_iri_ref();
    if (turtle_style) {
      skip_ws();
      expect_char('.');
    }
  }

  void parse_triples() {
    Resource subject = parse_subject();
    skip_ws();
    parse_predicate_object_list(subject);
    skip_ws();
    expect_char('.');
  }

  Resource parse_subject() {
    skip_ws();
    char c = peek();
    if (c == '<') return Iri(parse_iri_ref());
    if (c == '_') return parse_blank_node_label();
    if (c == '[') return parse_blank_node_property_list();
    if (c == '(') fail("RDF collections are not supported");
    return Iri(parse_prefixed_name());
  }

  void parse_predicate_object_list(const Resource& subject) {
    while (true) {
      skip_ws();
      Iri predicate = parse_predicate();
      parse_object_list(subject, predicate);
      skip_ws();
      if (match_char(';')) {
        skip_ws();
        // Turtle allows trailing ';' before '.' or ']'.
        if (peek() == '.' || peek() == ']' || peek() == ';') {
          while (match_char(';')) skip_ws();
          if (peek() == '.' || peek() == ']') return;
        }
        continue;
      }
      return;
    }
  }

  Iri parse_predicate() {
    skip_ws();
    char c = peek();
    if (c == 'a') {
      char after = peek(1);
      if (after == ' ' || after == '\t' || after == '\r' || after == '\n' || after == '<' ||
          after == '[' || after == '_' || after == '"' || after == '\'') {
        advance();
        return vocab::rdf_type();
      }
    }
    if (c == '<') return Iri(parse_iri_ref());
    return Iri(parse_prefixed_name());
  }

  void parse_object_list(const Resource& subject, const Iri& predicate) {
    while (true) {
      Term object = parse_object();
      graph_.insert(subject, predicate, std::move(object));
      skip_ws();
      if (!match_char(',')) return;
    }
  }

  Term parse_object() {
    skip_ws();
    char c = peek();
    if (c == '<') return Iri(parse_iri_ref());
    if (c == '_') return to_term(parse_blank_node_label());
    if (c == '[') return to_term(parse_blank_node_property_list());
    if (c == '(') fail("RDF collections are not supported");
    if (c == '"' || c == '\'') return parse_rdf_literal();
    if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      return parse_numeric_literal();
    }
    if (match_keyword("true")) return Literal("true", vocab::xsd_boolean());
    if (match_keyword("false")) return Literal("false", vocab::xsd_boolean());
    return Iri(parse_prefixed_name());
  }

  BlankNode parse_blank_node_label() {
    expect_char('_');
    expect_char(':');
    std::string label;
    while (!at_end()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
          static_cast<unsigned char>(c) >= 0x80) {
        label += advance();
      } else if (c == '.') {
        // '.' may appear inside a label but a trailing '.' ends the statement.
        char after = peek(1);
        if (std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == '-') {
          label += advance();
        } else {
          break;
        }
      } else {
        break;
      }
    }
    if (label.empty()) fail("empty blank node label");
    return fresh_blank(label);
  }

  // Labeled nodes map to "b0", "b1", ... in order of first appearance and
  // anonymous nodes to "a0", "a1", ...; the two spaces cannot collide and the
  // assignment depends only on the document, so parsing the same text twice
  // yields equal graphs, not merely isomorphic ones.
  BlankNode fresh_blank(const std::string& original) {
    auto it = blank_map_.find(original);
    if (it != blank_map_.end()) return BlankNode(it->second);
    std::string fresh = "b" + std::to_string(blank_map_.size());
    blank_map_.emplace(original, fresh);
    return BlankNode(fresh);
  }

  BlankNode anonymous_blank() { return BlankNode("a" + std::to_string(anon_counter_++)); }

  Resource parse_blank_node_property_list() {
    expect_char('[');
    BlankNode node = anonymous_blank();
    skip_ws();
    if (match_char(']')) return node;  // anonymous node with no properties
    parse_predicate_object_list(node);
    skip_ws();
    expect_char(']');
    return node;
  }

  Term parse_rdf_literal() {
    std::string lexical = parse_string();
    if (peek() == '@') {
      advance();
      std::string tag;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
        tag += advance();
      }
      if (tag.empty()) fail("empty language tag");
      return Literal::tagged(lexical, tag);
    }
    if (peek() == '^' && peek(1) == '^') {
      advance();
      advance();
      skip_ws();
      Iri dt = peek() == '<' ? Iri(parse_iri_ref()) : Iri(parse_prefixed_name());
      if (dt == vocab::rdf_lang_string()) {
        fail("rdf:langString literal requires a language tag, not a datatype annotation");
      }
      return Literal(lexical, dt);
    }
    return Literal(lexical);
  }

  std::string parse_string() {
    char quote = peek();
    if (quote != '"' && quote != '\'') fail("expected string literal");
    advance();
    bool long_string = false;
    if (peek() == quote && peek(1) == quote) {
      advance();
      advance();
      long_string = true;
    } else if (peek() == quote) {
      advance();
      return "";  // empty short string
    }
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      char c = peek();
      if (c == quote) {
        if (!long_string) {
          advance();
          return out;
        }
        if (peek(1) == quote && peek(2) == quote) {
          advance();
          advance();
          advance();
          return out;
        }
        out += advance();
        continue;
      }
      if (!long_string && (c == '\n' || c == '\r')) fail("newline in string literal");
      if (c == '\\') {
        advance();
        parse_escape(out);
        continue;
      }
      out += advance();
    }
  }

  void parse_escape(std::string& out) {
    if (at_end()) fail("dangling escape");
    char c = advance();
    switch (c) {
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u': append_utf8(out, parse_hex(4)); break;
      case 'U': append_utf8(out, parse_hex(8)); break;
      default: fail(std::string("invalid escape '\\") + c + "'");
    }
  }

  unsigned parse_hex(int digits) {
    unsigned value = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end()) fail("truncated unicode escape");
      char c = advance();
      value <<= 4;
      if (c >= '0' && c <= '9') value |= static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') value |= static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') value |= static_cast<unsigned>(c - 'A' + 10);
      else fail("invalid hex digit in unicode escape");
    }
    return value;
  }

  Term parse_numeric_literal() {
    std::string token;
    bool has_dot = false;
    bool has_exp = false;
    if (peek() == '+' || peek() == '-') token += advance();
    while (!at_end()) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        token += advance();
      } else if (c == '.' && !has_dot && !has_exp) {
        // A '.' not followed by a digit terminates the statement instead.
        if (!std::isdigit(static_cast<unsigned char>(peek(1)))) break;
        has_dot = true;
        token += advance();
      } else if ((c == 'e' || c == 'E') && !has_exp) {
        has_exp = true;
        token += advance();
        if (peek() == '+' || peek() == '-') token += advance();
      } else {
        break;
      }
    }
    if (token.empty() || token == "+" || token == "-") fail("invalid numeric literal");
    if (has_exp) return Literal(token, vocab::xsd_double());
    if (has_dot) return Literal(token, vocab::xsd_decimal());
    return Literal(token, vocab::xsd_integer());
  }

  std::string parse_iri_ref() {
    expect_char('<');
    std::string raw;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      char c = advance();
      if (c == '>') break;
      if (c == '\\') {
        char e = at_end() ? '\0' : advance();
        if (e == 'u') append_utf8(raw, parse_hex(4));
        else if (e == 'U') append_utf8(raw, parse_hex(8));
        else fail("invalid escape in IRI");
        continue;
      }
      if (c == ' ' || c == '\n' || c == '\t' || c == '\r') fail("whitespace in IRI");
      raw += c;
    }
    std::string resolved = base_.empty() ? raw : resolve_iri_reference(base_, raw);
    if (!Iri::valid(resolved)) {
      fail("relative IRI '" + raw + "' cannot be resolved (no base IRI in scope)");
    }
    return resolved;
  }

  // Parses "prefix:" and returns the prefix (possibly empty).
  std::string parse_pname_ns() {
    std::string prefix;
    while (!at_end() && peek() != ':') {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
          static_cast<unsigned char>(c) >= 0x80) {
        prefix += advance();
      } else {
        break;
      }
    }
    expect_char(':');
    return prefix;
  }

  std::string parse_prefixed_name() {
    std::string prefix = parse_pname_ns();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undefined prefix '" + prefix + ":'");
    std::string local;
    while (!at_end()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
          static_cast<unsigned char>(c) >= 0x80) {
        local += advance();
      } else if (c == '.') {
        char after = peek(1);
        if (std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == '-' ||
            after == '.') {
          local += advance();
        } else {
          break;
        }
      } else if (c == '\\') {
        advance();
        if (at_end()) fail("dangling escape in prefixed name");
        local += advance();  // PN_LOCAL_ESC: take the escaped char literally
      } else if (c == '%') {
        local += advance();
        for (int i = 0; i < 2; ++i) {
          if (at_end() || !std::isxdigit(static_cast<unsigned char>(peek()))) {
            fail("invalid percent escape in prefixed name");
          }
          local += advance();
        }
      } else {
        break;
      }
    }
    return it->second + local;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
  std::string base_;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, std::string> blank_map_;
  unsigned anon_counter_ = 0;
  Graph graph_;
};

}  // namespace

Graph parse_turtle(const std::string& text, const std::optional<Iri>& base) {
  return TurtleParser(text, base).parse();
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

void escape_literal_into(std::string& out, const std::string& s) {
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
}

std::string nt_term(const Term& t) {
  std::string out;
  if (const auto* i = std::get_if<Iri>(&t)) {
    out = "<" + i->str() + ">";
  } else if (const auto* b = std::get_if<BlankNode>(&t)) {
    out = "_:" + b->label();
  } else {
    const auto& l = std::get<Literal>(t);
    out = "\"";
    escape_literal_into(out, l.lexical());
    out += "\"";
    if (l.language()) {
      out += "@" + *l.language();
    } else if (l.datatype() != vocab::xsd_string()) {
      out += "^^<" + l.datatype().str() + ">";
    }
  }
  return out;
}

const std::vector<std::pair<std::string, std::string>>& turtle_prefix_table() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"rdf", vocab::RDF},   {"rdfs", vocab::RDFS}, {"xsd", vocab::XSD},
      {"rr", vocab::RR},     {"rml", vocab::RML},   {"ql", vocab::QL},
      {"fnml", vocab::FNML}, {"fno", vocab::FNO},
      {"foaf", "http://xmlns.com/foaf/0.1/"},
  };
  return table;
}

bool pn_local_safe(const std::string& local) {
  if (local.empty()) return false;
  char first = local[0];
  if (!std::isalpha(static_cast<unsigned char>(first)) && first != '_' &&
      !std::isdigit(static_cast<unsigned char>(first))) {
    return false;
  }
  for (char c : local) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

std::string turtle_iri(const std::string& iri, std::set<std::string>& used_prefixes) {
  for (const auto& [prefix, ns] : turtle_prefix_table()) {
    if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0) {
      std::string local = iri.substr(ns.size());
      if (pn_local_safe(local)) {
        used_prefixes.insert(prefix);
        return prefix + ":" + local;
      }
    }
  }
  return "<" + iri + ">";
}

std::string turtle_term(const Term& t, std::set<std::string>& used_prefixes) {
  if (const auto* i = std::get_if<Iri>(&t)) return turtle_iri(i->str(), used_prefixes);
  if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label();
  const auto& l = std::get<Literal>(t);
  std::string out = "\"";
  escape_literal_into(out, l.lexical());
  out += "\"";
  if (l.language()) {
    out += "@" + *l.language();
  } else if (l.datatype() != vocab::xsd_string()) {
    out += "^^" + turtle_iri(l.datatype().str(), used_prefixes);
  }
  return out;
}

}  // namespace

std::string to_ntriples(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const auto& t : g) {
    lines.push_back(nt_term(to_term(t.subject)) + " <" + t.predicate.str() + "> " +
                    nt_term(t.object) + " .");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::string to_turtle(const Graph& g) {
  // Group triples by subject; graph iteration is already subject-sorted.
  std::set<std::string> used;
  std::string body;
  const Resource* current = nullptr;
  const Iri* current_pred = nullptr;
  for (const auto& t : g) {
    std::string subj = turtle_term(to_term(t.subject), used);
    if (current == nullptr || !(*current == t.subject)) {
      if (current != nullptr) body += " .\n";
      body += subj + " " + turtle_iri(t.predicate.str(), used) + " " +
              turtle_term(t.object, used);
      current = &t.subject;
      current_pred = &t.predicate;
    } else if (!(*current_pred == t.predicate)) {
      body += " ;\n    " + turtle_iri(t.predicate.str(), used) + " " +
              turtle_term(t.object, used);
      current_pred = &t.predicate;
    } else {
      body += ", " + turtle_term(t.object, used);
    }
  }
  if (current != nullptr) body += " .\n";

  std::string out;
  for (const auto& [prefix, ns] : turtle_prefix_table()) {
    if (used.count(prefix)) out += "@prefix " + prefix + ": <" + ns + "> .\n";
  }
  if (!out.empty() && !body.empty()) out += "\n";
  return out + body;
}

std::optional<Format> format_from_name(const std::string& name) {
  std::string n;
  for (char c : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (n == "nt" || n == "ntriples" || n == "n-triples") return Format::NTriples;
  if (n == "nquads" || n == "nq" || n == "n-quads") return Format::NQuads;
  if (n == "turtle" || n == "ttl") return Format::Turtle;
  if (n == "n3") return Format::N3;
  if (n == "trig") return Format::TriG;
  if (n == "xml") return Format::Xml;
  if (n == "pretty-xml") return Format::PrettyXml;
  if (n == "trix") return Format::TriX;
  return std::nullopt;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::NTriples: return "nt";
    case Format::NQuads: return "nquads";
    case Format::Turtle: return "turtle";
    case Format::N3: return "n3";
    case Format::TriG: return "trig";
    case Format::Xml: return "xml";
    case Format::PrettyXml: return "pretty-xml";
    case Format::TriX: return "trix";
  }
  return "?";
}

std::string serialize(const Graph& g, Format format) {
  switch (format) {
    case Format::NTriples:
    case Format::NQuads:
      // The engine emits no named graphs, so the N-Quads form of a graph is
      // its N-Triples form.
      return to_ntriples(g);
    case Format::Turtle:
    case Format::N3:
    case Format::TriG:
      return to_turtle(g);
    case Format::Xml:
    case Format::PrettyXml:
    case Format::TriX:
      throw UnsupportedFormatError("serialization format '" + format_name(format) +
                                   "' is not implemented");
  }
  throw UnsupportedFormatError("unknown serialization format");
}

}  // namespace loom
