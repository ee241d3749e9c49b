#include "loom/functions.hpp"

#include <cctype>

namespace loom {

bool FunctionRegistry::register_function(FunctionSignature signature,
                                         FunctionCallable callable) {
  const std::string key = signature.function_iri.str();
  bool replaced = entries_.count(key) > 0;
  entries_.insert_or_assign(key, Entry{std::move(signature), std::move(callable)});
  return replaced;
}

bool FunctionRegistry::has(const Iri& function_iri) const {
  return entries_.count(function_iri.str()) > 0;
}

std::optional<std::string> FunctionRegistry::invoke(
    const Iri& function_iri,
    const std::map<std::string, std::optional<std::string>>& arguments) const {
  auto it = entries_.find(function_iri.str());
  if (it == entries_.end()) {
    throw FunctionError("no function registered for <" + function_iri.str() + ">");
  }
  const Entry& entry = it->second;

  std::vector<std::string> args;
  args.reserve(entry.signature.parameters.size());
  for (const Iri& param : entry.signature.parameters) {
    auto arg = arguments.find(param.str());
    if (arg == arguments.end()) {
      throw FunctionError("function <" + function_iri.str() + "> requires parameter <" +
                          param.str() + ">");
    }
    if (!arg->second) return std::nullopt;
    args.push_back(*arg->second);
  }
  return entry.callable(args);
}

namespace {

std::string ascii_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string ascii_upper(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string trim_ws(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string escape_markup(const std::string& s, bool xml) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += xml ? "&apos;" : "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_url(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    bool unreserved = std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~';
    if (unreserved) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 0x0F];
    }
  }
  return out;
}

std::string escape_csv(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string escape_javascript(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\'': out += "\\'"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

FunctionRegistry builtin_suite() {
  FunctionRegistry registry;
  const Iri value(vocab::GREL + "valueParameter");
  const Iri mode(vocab::GREL + "modeParameter");

  registry.register_function({Iri(vocab::GREL + "toLowerCase"), {value}},
                             [](const std::vector<std::string>& a) { return ascii_lower(a[0]); });
  registry.register_function({Iri(vocab::GREL + "toUpperCase"), {value}},
                             [](const std::vector<std::string>& a) { return ascii_upper(a[0]); });
  registry.register_function({Iri(vocab::GREL + "trim"), {value}},
                             [](const std::vector<std::string>& a) { return trim_ws(a[0]); });
  registry.register_function(
      {Iri(vocab::GREL + "escape"), {value, mode}},
      [](const std::vector<std::string>& a) -> std::optional<std::string> {
        const std::string& text = a[0];
        const std::string& mode_name = a[1];
        if (mode_name == "html") return escape_markup(text, /*xml=*/false);
        if (mode_name == "xml") return escape_markup(text, /*xml=*/true);
        if (mode_name == "url") return escape_url(text);
        if (mode_name == "csv") return escape_csv(text);
        if (mode_name == "javascript") return escape_javascript(text);
        throw FunctionError("unknown escape mode '" + mode_name + "'");
      });
  return registry;
}

}  // namespace loom
