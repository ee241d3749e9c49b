#include "loom/xml.hpp"

#include <cctype>
#include <cstdlib>

namespace loom {

const std::string* XmlElement::attribute(const std::string& att_name) const {
  for (const auto& [k, v] : attributes) {
    if (k == att_name) return &v;
  }
  return nullptr;
}

namespace {

class XmlParser {
 public:
  explicit XmlParser(const std::string& text) : text_(text) {}

  XmlElement parse_document() {
    skip_bom();
    skip_misc();
    if (at_end() || peek() != '<') fail("expected document element");
    XmlElement root = parse_element();
    skip_misc();
    if (!at_end()) fail("content after document element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    int line = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') ++line;
    }
    throw XmlError("xml parse error at line " + std::to_string(line) + ": " + msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(const std::string& s) const { return text_.compare(pos_, s.size(), s) == 0; }

  void skip_bom() {
    if (text_.compare(0, 3, "\xEF\xBB\xBF") == 0) pos_ = 3;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  // Whitespace, comments, PIs, and the XML declaration between markup.
  void skip_misc() {
    while (true) {
      skip_ws();
      if (starts_with("<?")) {
        std::size_t end = text_.find("?>", pos_);
        if (end == std::string::npos) fail("unterminated processing instruction");
        pos_ = end + 2;
      } else if (starts_with("<!--")) {
        std::size_t end = text_.find("-->", pos_ + 4);
        if (end == std::string::npos) fail("unterminated comment");
        pos_ = end + 3;
      } else if (starts_with("<!DOCTYPE")) {
        fail("DTDs are not supported");
      } else {
        return;
      }
    }
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (!at_end()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
          c == ':' || static_cast<unsigned char>(c) >= 0x80) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  void decode_entity(std::string& out) {
    // pos_ is just past '&'
    std::size_t semi = text_.find(';', pos_);
    if (semi == std::string::npos || semi - pos_ > 12) fail("unterminated entity reference");
    std::string ent = text_.substr(pos_, semi - pos_);
    pos_ = semi + 1;
    if (ent == "amp") out += '&';
    else if (ent == "lt") out += '<';
    else if (ent == "gt") out += '>';
    else if (ent == "quot") out += '"';
    else if (ent == "apos") out += '\'';
    else if (!ent.empty() && ent[0] == '#') {
      unsigned cp = 0;
      if (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')) {
        cp = static_cast<unsigned>(std::strtoul(ent.c_str() + 2, nullptr, 16));
      } else {
        cp = static_cast<unsigned>(std::strtoul(ent.c_str() + 1, nullptr, 10));
      }
      if (cp == 0) fail("invalid character reference &" + ent + ";");
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
    } else {
      fail("unknown entity &" + ent + ";");
    }
  }

  std::string parse_attribute_value() {
    char quote = peek();
    if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
    ++pos_;
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated attribute value");
      char c = text_[pos_];
      if (c == quote) {
        ++pos_;
        return out;
      }
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        ++pos_;
        decode_entity(out);
      } else {
        out += c;
        ++pos_;
      }
    }
  }

  XmlElement parse_element() {
    ++pos_;  // consume '<'
    XmlElement el;
    el.name = parse_name();
    while (true) {
      skip_ws();
      if (at_end()) fail("unterminated start tag for <" + el.name + ">");
      if (peek() == '>') {
        ++pos_;
        parse_content(el);
        return el;
      }
      if (peek() == '/' && peek(1) == '>') {
        pos_ += 2;
        return el;
      }
      std::string att = parse_name();
      skip_ws();
      if (!at_end() && peek() == '=') {
        ++pos_;
      } else {
        fail("expected '=' after attribute name '" + att + "'");
      }
      skip_ws();
      std::string value = parse_attribute_value();
      for (const auto& [k, v] : el.attributes) {
        if (k == att) fail("duplicate attribute '" + att + "'");
      }
      el.attributes.emplace_back(att, value);
    }
  }

  void parse_content(XmlElement& el) {
    while (true) {
      if (at_end()) fail("unterminated element <" + el.name + ">");
      char c = peek();
      if (c == '<') {
        if (starts_with("</")) {
          pos_ += 2;
          std::string closing = parse_name();
          if (closing != el.name) {
            fail("mismatched end tag: expected </" + el.name + ">, found </" + closing + ">");
          }
          skip_ws();
          if (at_end() || peek() != '>') fail("malformed end tag");
          ++pos_;
          return;
        }
        if (starts_with("<!--")) {
          std::size_t end = text_.find("-->", pos_ + 4);
          if (end == std::string::npos) fail("unterminated comment");
          pos_ = end + 3;
          continue;
        }
        if (starts_with("<![CDATA[")) {
          std::size_t end = text_.find("]]>", pos_ + 9);
          if (end == std::string::npos) fail("unterminated CDATA section");
          el.text += text_.substr(pos_ + 9, end - pos_ - 9);
          pos_ = end + 3;
          continue;
        }
        if (starts_with("<?")) {
          std::size_t end = text_.find("?>", pos_);
          if (end == std::string::npos) fail("unterminated processing instruction");
          pos_ = end + 2;
          continue;
        }
        el.children.push_back(parse_element());
        continue;
      }
      if (c == '&') {
        ++pos_;
        decode_entity(el.text);
        continue;
      }
      el.text += c;
      ++pos_;
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

struct XPathStep {
  std::string name;       // element name or "*"
  bool descendant = false;  // true for '//' steps
  int index = 0;            // 1-based positional predicate, 0 = all
};

std::vector<XPathStep> parse_xpath(const std::string& expr, bool& absolute) {
  if (expr.empty()) throw XmlError("empty XPath expression");
  absolute = expr[0] == '/';
  std::vector<XPathStep> steps;
  std::size_t i = 0;
  while (i < expr.size()) {
    XPathStep step;
    if (expr[i] == '/') {
      ++i;
      if (i < expr.size() && expr[i] == '/') {
        step.descendant = true;
        ++i;
      }
    }
    std::size_t start = i;
    while (i < expr.size() && expr[i] != '/' && expr[i] != '[') ++i;
    step.name = expr.substr(start, i - start);
    if (step.name.empty()) throw XmlError("empty step in XPath '" + expr + "'");
    if (i < expr.size() && expr[i] == '[') {
      std::size_t close = expr.find(']', i);
      if (close == std::string::npos) throw XmlError("unterminated predicate in '" + expr + "'");
      std::string num = expr.substr(i + 1, close - i - 1);
      char* end = nullptr;
      long v = std::strtol(num.c_str(), &end, 10);
      if (end == nullptr || *end != '\0' || v <= 0) {
        throw XmlError("only positional predicates are supported: [" + num + "]");
      }
      step.index = static_cast<int>(v);
      i = close + 1;
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

void apply_position(const XPathStep& step, std::vector<const XmlElement*>& matched) {
  if (step.index <= 0) return;
  if (static_cast<std::size_t>(step.index) <= matched.size()) {
    matched = {matched[step.index - 1]};
  } else {
    matched.clear();
  }
}

void collect_descendants(const XmlElement& el, const std::string& name,
                         std::vector<const XmlElement*>& out) {
  for (const auto& child : el.children) {
    if (name == "*" || child.name == name) out.push_back(&child);
    collect_descendants(child, name, out);
  }
}

}  // namespace

XmlElement parse_xml(const std::string& text) { return XmlParser(text).parse_document(); }

std::vector<const XmlElement*> xpath_select(const XmlElement& root, const std::string& expr) {
  bool absolute = false;
  std::vector<XPathStep> steps = parse_xpath(expr, absolute);

  std::vector<const XmlElement*> current;
  std::size_t next_step = 0;
  if (absolute) {
    // An absolute path starts above the document element, so its first step
    // is matched against the document element itself (and, for '//', every
    // descendant too).
    const XPathStep& first = steps.front();
    std::vector<const XmlElement*> matched;
    if (first.name == "*" || root.name == first.name) matched.push_back(&root);
    if (first.descendant) collect_descendants(root, first.name, matched);
    apply_position(first, matched);
    current = std::move(matched);
    next_step = 1;
  } else {
    current = {&root};
  }

  for (std::size_t s = next_step; s < steps.size(); ++s) {
    const XPathStep& step = steps[s];
    std::vector<const XmlElement*> next;
    for (const XmlElement* node : current) {
      std::vector<const XmlElement*> matched;
      if (step.descendant) {
        collect_descendants(*node, step.name, matched);
      } else {
        for (const auto& child : node->children) {
          if (step.name == "*" || child.name == step.name) matched.push_back(&child);
        }
      }
      apply_position(step, matched);
      next.insert(next.end(), matched.begin(), matched.end());
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace loom
