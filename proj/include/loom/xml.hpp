#ifndef LOOM_XML_HPP
#define LOOM_XML_HPP

#include <string>
#include <utility>
#include <vector>

#include "loom/frame.hpp"

namespace loom {

class XmlError : public SourceError {
 public:
  using SourceError::SourceError;
};

// Minimal XML document tree. Mixed content is flattened: an element keeps
// its direct text (concatenated, entity-decoded) plus its child elements.
// Namespaces are not interpreted; names are kept verbatim, prefixes and all.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlElement> children;
  std::string text;

  const std::string* attribute(const std::string& att_name) const;
};

// Parses a document and returns its root element. Supports the XML
// declaration, comments, CDATA, processing instructions, character and
// predefined entity references. DTDs are not supported.
XmlElement parse_xml(const std::string& text);

// Evaluates an XPath subset against the document root: absolute paths
// (/a/b), descendant steps (//b), wildcards (*), and 1-based positional
// predicates (b[2]). Returns matched elements in document order.
std::vector<const XmlElement*> xpath_select(const XmlElement& root, const std::string& expr);

}  // namespace loom

#endif  // LOOM_XML_HPP
