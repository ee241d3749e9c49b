#ifndef LOOM_SOURCES_HPP
#define LOOM_SOURCES_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "loom/frame.hpp"

namespace loom {

// What kind of backend a logical source names. File sources are handled by
// the built-in loaders; relational and SPARQL sources are recognized so a
// mapping that uses them fails with a precise message instead of a parse
// error, and can be served by a registered adapter.
enum class SourceKind { File, Sql, SparqlService };

enum class ReferenceFormulation { Csv, JsonPath, XPath };

std::string formulation_name(ReferenceFormulation f);

struct LogicalSourceDescriptor {
  std::string id;  // display label for diagnostics (IRI or blank label)
  SourceKind kind = SourceKind::File;
  std::string location;  // file path, connection string, or endpoint IRI
  std::optional<ReferenceFormulation> formulation;
  std::optional<std::string> iterator;
  std::optional<std::string> sql_table;  // rr:tableName, kept for diagnostics

  // Cache identity; two descriptors with equal keys resolve to one Frame.
  std::string cache_key() const;
};

// RFC 4180 CSV with a header row. Cells are text exactly as written; an
// empty field is the empty string, while a missing trailing field is null.
Frame load_csv(const std::string& path);
Frame load_csv_text(const std::string& text);

// One row per node selected by the JSONPath iterator. Nested objects are
// flattened to dot-separated column names; arrays and objects themselves are
// recorded as non-scalar so references to them fail loudly.
Frame load_json(const std::string& path, const std::string& iterator);
Frame load_json_text(const std::string& text, const std::string& iterator);

// One row per element selected by the XPath iterator. Columns are attribute
// names prefixed with '@' and slash-joined paths to leaf child elements.
Frame load_xml(const std::string& path, const std::string& iterator);
Frame load_xml_text(const std::string& text, const std::string& iterator);

// Resolves descriptors to Frames, one file read per distinct descriptor per
// resolver lifetime. Thread-safe. Adapters for non-file backends can be
// registered; without one, SQL/SPARQL descriptors raise SourceError.
class FrameResolver {
 public:
  using Adapter = std::function<Frame(const LogicalSourceDescriptor&)>;

  std::shared_ptr<const Frame> resolve(const LogicalSourceDescriptor& descriptor);

  // Number of actual loads performed (cache misses).
  std::size_t load_count() const;

  void register_adapter(SourceKind kind, Adapter adapter);

 private:
  Frame load(const LogicalSourceDescriptor& descriptor) const;

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const Frame>> cache_;
  std::map<SourceKind, Adapter> adapters_;
  std::size_t loads_ = 0;
};

}  // namespace loom

#endif  // LOOM_SOURCES_HPP
