#include "loom/sources.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "loom/xml.hpp"

namespace loom {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SourceError("cannot open source file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
  return text;
}

}  // namespace

std::string formulation_name(ReferenceFormulation f) {
  switch (f) {
    case ReferenceFormulation::Csv: return "CSV";
    case ReferenceFormulation::JsonPath: return "JSONPath";
    case ReferenceFormulation::XPath: return "XPath";
  }
  return "?";
}

std::string LogicalSourceDescriptor::cache_key() const {
  std::string key = std::to_string(static_cast<int>(kind)) + "|" + location + "|";
  if (formulation) key += formulation_name(*formulation);
  key += "|";
  if (iterator) key += *iterator;
  if (sql_table) key += "|" + *sql_table;
  return key;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> parse_csv_records(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t i = 0;

  auto end_field = [&] {
    record.push_back(field);
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  while (i < text.size()) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          in_quotes = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty() && !field_started) {
          in_quotes = true;
          field_started = true;
        } else {
          field += '"';  // quote inside an unquoted field, taken literally
        }
        ++i;
        break;
      case ',':
        end_field();
        ++i;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        [[fallthrough]];
      case '\n':
        end_record();
        ++i;
        break;
      default:
        field += c;
        field_started = true;
        ++i;
    }
  }
  if (in_quotes) throw SourceError("malformed CSV: unbalanced quotes");
  if (field_started || !field.empty() || !record.empty()) end_record();
  return records;
}

}  // namespace

Frame load_csv_text(const std::string& text) {
  auto records = parse_csv_records(text);
  if (records.empty()) throw SourceError("CSV file has no header row");

  Frame frame(records[0], /*strict=*/true);
  std::size_t width = records[0].size();
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() > width) {
      throw SourceError("CSV record " + std::to_string(r) + " has " +
                        std::to_string(rec.size()) + " fields, header has " +
                        std::to_string(width));
    }
    std::vector<Cell> cells;
    cells.reserve(width);
    for (std::size_t c = 0; c < width; ++c) {
      if (c < rec.size()) {
        cells.emplace_back(rec[c]);
      } else {
        cells.emplace_back(std::nullopt);  // missing trailing field
      }
    }
    frame.add_row(std::move(cells));
  }
  return frame;
}

Frame load_csv(const std::string& path) { return load_csv_text(read_file(path)); }

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

std::string stringify_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (std::isfinite(d) && d == std::trunc(d) && std::abs(d) < 9.0e15) {
      return std::to_string(static_cast<std::int64_t>(d));
    }
    return v.dump();
  }
  return v.dump();
}

// JSONPath subset: $, .name, ['name'], [n], [*], .* and recursive descent
// ..name. Evaluates to the list of matched nodes.
std::vector<const json*> jsonpath_select(const json& doc, const std::string& expr) {
  if (expr.empty() || expr[0] != '$') {
    throw SourceError("JSONPath must start with '$': '" + expr + "'");
  }
  std::vector<const json*> current = {&doc};
  std::size_t i = 1;

  auto step_child = [&](const std::string& name, bool recursive) {
    std::vector<const json*> next;
    for (const json* node : current) {
      if (recursive) {
        // Depth-first collection of every member with the given key.
        std::vector<const json*> stack = {node};
        while (!stack.empty()) {
          const json* n = stack.back();
          stack.pop_back();
          if (n->is_object()) {
            for (auto it = n->begin(); it != n->end(); ++it) {
              if (it.key() == name) next.push_back(&it.value());
              stack.push_back(&it.value());
            }
          } else if (n->is_array()) {
            for (const auto& item : *n) stack.push_back(&item);
          }
        }
      } else if (name == "*") {
        if (node->is_object()) {
          for (const auto& [k, v] : node->items()) {
            (void)k;
            next.push_back(&v);
          }
        } else if (node->is_array()) {
          for (const auto& item : *node) next.push_back(&item);
        }
      } else if (node->is_object() && node->contains(name)) {
        next.push_back(&(*node)[name]);
      }
    }
    current = std::move(next);
  };

  while (i < expr.size()) {
    if (expr[i] == '.') {
      bool recursive = false;
      ++i;
      if (i < expr.size() && expr[i] == '.') {
        recursive = true;
        ++i;
      }
      std::size_t start = i;
      while (i < expr.size() && expr[i] != '.' && expr[i] != '[') ++i;
      std::string name = expr.substr(start, i - start);
      if (name.empty()) throw SourceError("empty step in JSONPath '" + expr + "'");
      step_child(name, recursive);
    } else if (expr[i] == '[') {
      std::size_t close = expr.find(']', i);
      if (close == std::string::npos) {
        throw SourceError("unterminated bracket in JSONPath '" + expr + "'");
      }
      std::string inside = expr.substr(i + 1, close - i - 1);
      i = close + 1;
      if (inside == "*") {
        step_child("*", false);
      } else if (inside.size() >= 2 && (inside[0] == '\'' || inside[0] == '"') &&
                 inside.back() == inside[0]) {
        step_child(inside.substr(1, inside.size() - 2), false);
      } else {
        char* end = nullptr;
        long idx = std::strtol(inside.c_str(), &end, 10);
        if (end == nullptr || *end != '\0' || idx < 0) {
          throw SourceError("unsupported JSONPath selector [" + inside + "]");
        }
        std::vector<const json*> next;
        for (const json* node : current) {
          if (node->is_array() && static_cast<std::size_t>(idx) < node->size()) {
            next.push_back(&(*node)[static_cast<std::size_t>(idx)]);
          }
        }
        current = std::move(next);
      }
    } else {
      throw SourceError("malformed JSONPath '" + expr + "'");
    }
  }
  return current;
}

void flatten_json_row(Frame& frame, std::size_t row, const std::string& prefix, const json& node) {
  if (node.is_object()) {
    if (!prefix.empty()) frame.mark_non_scalar(prefix);
    for (const auto& [key, value] : node.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      flatten_json_row(frame, row, path, value);
    }
  } else if (node.is_array()) {
    if (!prefix.empty()) frame.mark_non_scalar(prefix);
  } else if (node.is_null()) {
    frame.ensure_column(prefix);
  } else {
    frame.set_cell(row, prefix, stringify_scalar(node));
  }
}

}  // namespace

Frame load_json_text(const std::string& text, const std::string& iterator) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SourceError(std::string("JSON parse error: ") + e.what());
  }
  std::vector<const json*> nodes = jsonpath_select(doc, iterator);
  Frame frame({}, /*strict=*/false);
  for (const json* node : nodes) {
    std::size_t row = frame.add_empty_row();
    if (node->is_object()) {
      flatten_json_row(frame, row, "", *node);
    }
    // Scalar or array rows carry no addressable columns; every reference
    // against them is null.
  }
  return frame;
}

Frame load_json(const std::string& path, const std::string& iterator) {
  return load_json_text(read_file(path), iterator);
}

// ---------------------------------------------------------------------------
// XML
// ---------------------------------------------------------------------------

namespace {

bool all_whitespace(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void flatten_xml_row(Frame& frame, std::size_t row, const std::string& prefix,
                     const XmlElement& el) {
  for (const auto& [name, value] : el.attributes) {
    std::string path = prefix.empty() ? "@" + name : prefix + "/@" + name;
    frame.set_cell(row, path, value);
  }
  std::set<std::string> seen;
  for (const auto& child : el.children) {
    std::string path = prefix.empty() ? child.name : prefix + "/" + child.name;
    if (!seen.insert(child.name).second) continue;  // first occurrence wins
    if (child.children.empty()) {
      frame.set_cell(row, path, child.text);
    } else {
      frame.mark_non_scalar(path);
      flatten_xml_row(frame, row, path, child);
    }
  }
}

}  // namespace

Frame load_xml_text(const std::string& text, const std::string& iterator) {
  XmlElement root = parse_xml(text);
  std::vector<const XmlElement*> nodes = xpath_select(root, iterator);
  Frame frame({}, /*strict=*/false);
  for (const XmlElement* node : nodes) {
    std::size_t row = frame.add_empty_row();
    flatten_xml_row(frame, row, "", *node);
    if (node->children.empty() || !all_whitespace(node->text)) {
      // Text content of the row element itself, addressable as ".".
      frame.set_cell(row, ".", node->text);
    }
  }
  return frame;
}

Frame load_xml(const std::string& path, const std::string& iterator) {
  return load_xml_text(read_file(path), iterator);
}

// ---------------------------------------------------------------------------
// Resolver
// ---------------------------------------------------------------------------

std::shared_ptr<const Frame> FrameResolver::resolve(const LogicalSourceDescriptor& descriptor) {
  const std::string key = descriptor.cache_key();
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto frame = std::make_shared<const Frame>(load(descriptor));
  ++loads_;
  cache_.emplace(key, frame);
  return frame;
}

std::size_t FrameResolver::load_count() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return loads_;
}

void FrameResolver::register_adapter(SourceKind kind, Adapter adapter) {
  std::lock_guard<std::mutex> lock(mutex_);
  adapters_[kind] = std::move(adapter);
}

Frame FrameResolver::load(const LogicalSourceDescriptor& d) const {
  auto adapter = adapters_.find(d.kind);
  if (adapter != adapters_.end()) return adapter->second(d);

  switch (d.kind) {
    case SourceKind::Sql:
      throw SourceError("logical source " + d.id +
                        " names a relational database, but no SQL adapter is installed; "
                        "register one with FrameResolver::register_adapter");
    case SourceKind::SparqlService:
      throw SourceError("logical source " + d.id +
                        " names a SPARQL service, but no SPARQL adapter is installed; "
                        "register one with FrameResolver::register_adapter");
    case SourceKind::File:
      break;
  }
  if (!d.formulation) {
    throw SourceError("logical source " + d.id + " has no reference formulation");
  }
  switch (*d.formulation) {
    case ReferenceFormulation::Csv:
      return load_csv(d.location);
    case ReferenceFormulation::JsonPath:
      if (!d.iterator) throw SourceError("JSON source " + d.id + " requires rml:iterator");
      return load_json(d.location, *d.iterator);
    case ReferenceFormulation::XPath:
      if (!d.iterator) throw SourceError("XML source " + d.id + " requires rml:iterator");
      return load_xml(d.location, *d.iterator);
  }
  throw SourceError("unsupported reference formulation");
}

}  // namespace loom
