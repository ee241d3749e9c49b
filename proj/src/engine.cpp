#include "loom/engine.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <unordered_map>

#include "loom/turtle.hpp"

namespace loom {

std::string phase_name(Phase phase) {
  switch (phase) {
    case Phase::Render: return "render";
    case Phase::Parse: return "parse";
    case Phase::Model: return "model";
    case Phase::Execute: return "execution";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// document variables
// ---------------------------------------------------------------------------

namespace {

bool identifier_like(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

std::string render_template(const std::string& text,
                            const std::map<std::string, std::string>& variables) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t open = text.find("{{", i);
    if (open == std::string::npos) {
      out.append(text, i, std::string::npos);
      break;
    }
    out.append(text, i, open - i);
    std::size_t close = text.find("}}", open + 2);
    if (close == std::string::npos) {
      out.append(text, open, std::string::npos);
      break;
    }
    std::string inner = text.substr(open + 2, close - open - 2);
    std::size_t b = inner.find_first_not_of(" \t");
    std::size_t e = inner.find_last_not_of(" \t");
    std::string name = b == std::string::npos ? "" : inner.substr(b, e - b + 1);
    if (!identifier_like(name)) {
      // Not a variable group; emit verbatim.
      out.append(text, open, close + 2 - open);
    } else {
      auto it = variables.find(name);
      if (it == variables.end()) {
        throw EngineError(Phase::Render, "unbound document variable '" + name + "'");
      }
      out += it->second;
    }
    i = close + 2;
  }
  return out;
}

// ---------------------------------------------------------------------------
// term templates
// ---------------------------------------------------------------------------

namespace {

struct TemplatePart {
  bool placeholder;
  std::string text;  // literal text, or the referenced name
};

std::vector<TemplatePart> compile_template(const std::string& tmpl) {
  std::vector<TemplatePart> parts;
  std::string current;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    char c = tmpl[i];
    if (c == '\\' && i + 1 < tmpl.size() &&
        (tmpl[i + 1] == '{' || tmpl[i + 1] == '}' || tmpl[i + 1] == '\\')) {
      current += tmpl[i + 1];
      i += 2;
      continue;
    }
    if (c == '{') {
      std::size_t close = tmpl.find('}', i + 1);
      if (close == std::string::npos) {
        throw Error("unbalanced '{' in template '" + tmpl + "'");
      }
      std::string name = tmpl.substr(i + 1, close - i - 1);
      if (name.empty()) throw Error("empty placeholder in template '" + tmpl + "'");
      if (!current.empty()) {
        parts.push_back({false, current});
        current.clear();
      }
      parts.push_back({true, name});
      i = close + 1;
      continue;
    }
    if (c == '}') throw Error("unbalanced '}' in template '" + tmpl + "'");
    current += c;
    ++i;
  }
  if (!current.empty()) parts.push_back({false, current});
  return parts;
}

std::string iri_safe_encode(const std::string& value) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  out.reserve(value.size());
  for (unsigned char c : value) {
    if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~' || c >= 0x80) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 0x0F];
    }
  }
  return out;
}

std::string ascii_lower_copy(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// xsd:boolean lexical forms are canonicalized at construction; other
// datatypes keep the source text untouched.
std::string canonical_boolean(const std::string& s) {
  const std::string lower = ascii_lower_copy(s);
  if (s == "1" || lower == "true") return "true";
  if (s == "0" || lower == "false") return "false";
  return s;
}

// The raw string a term map produces for one row, before it is shaped into
// a term. Null when any referenced value is null. encode_placeholders is
// true at IRI positions only; constants never reach this function.
std::optional<std::string> raw_from_parts(const std::vector<TemplatePart>& parts,
                                          const Frame& frame, std::size_t row,
                                          bool encode_placeholders) {
  std::string out;
  for (const auto& part : parts) {
    if (!part.placeholder) {
      out += part.text;
      continue;
    }
    const Cell& cell = frame.cell(row, part.text);
    if (!cell) return std::nullopt;
    out += encode_placeholders ? iri_safe_encode(*cell) : *cell;
  }
  return out;
}

TermKind effective_kind(const TermGenerationSpec& spec, TermPosition position) {
  if (spec.term_type) return *spec.term_type;
  if (position == TermPosition::Object) {
    bool literalish =
        spec.reference || spec.language || spec.language_reference || spec.datatype;
    return literalish ? TermKind::Literal : TermKind::Iri;
  }
  return TermKind::Iri;
}

Iri shape_iri(const std::string& raw, const std::string& base) {
  if (Iri::valid(raw)) return Iri(raw);
  std::string resolved = resolve_iri_reference(base, raw);
  if (!Iri::valid(resolved)) {
    throw Error("'" + raw + "' does not form a valid IRI");
  }
  return Iri(resolved);
}

Term shape_literal(const std::string& raw, const TermGenerationSpec& spec,
                   const RowContext& ctx) {
  std::optional<std::string> tag = spec.language;
  if (!tag && spec.language_reference) {
    const Cell& cell = ctx.frame.cell(ctx.row, *spec.language_reference);
    if (cell && !cell->empty()) tag = *cell;
  }
  if (tag && !tag->empty()) return Literal::tagged(raw, *tag);
  if (spec.datatype) {
    if (*spec.datatype == vocab::xsd_boolean()) {
      return Literal(canonical_boolean(raw), *spec.datatype);
    }
    return Literal(raw, *spec.datatype);
  }
  return Literal(raw);
}

std::optional<Term> core_evaluate(const TermGenerationSpec& spec, TermPosition position,
                                  const RowContext& ctx,
                                  const std::vector<TemplatePart>* compiled) {
  if (spec.constant) return spec.constant;

  TermKind kind = effective_kind(spec, position);
  std::optional<std::string> raw;
  if (spec.reference) {
    const Cell& cell = ctx.frame.cell(ctx.row, *spec.reference);
    if (!cell) return std::nullopt;
    raw = *cell;
  } else if (spec.template_text) {
    std::vector<TemplatePart> local;
    if (!compiled) {
      local = compile_template(*spec.template_text);
      compiled = &local;
    }
    raw = raw_from_parts(*compiled, ctx.frame, ctx.row, kind == TermKind::Iri);
    if (!raw) return std::nullopt;
  } else {
    throw Error("term map " + spec.id + " has no value source");
  }

  switch (kind) {
    case TermKind::Iri:
      return Term(shape_iri(*raw, ctx.base_iri));
    case TermKind::BlankNode:
      return Term(BlankNode(ctx.mint_scope + "_r" + std::to_string(ctx.row)));
    case TermKind::Literal:
      return shape_literal(*raw, spec, ctx);
  }
  throw Error("unreachable term kind");
}

}  // namespace

std::string expand_iri_template(const std::string& template_text,
                                const std::map<std::string, std::string>& values) {
  try {
    auto parts = compile_template(template_text);
    std::string out;
    for (const auto& part : parts) {
      if (!part.placeholder) {
        out += part.text;
        continue;
      }
      auto it = values.find(part.text);
      if (it == values.end()) {
        throw Error("template references unbound name '" + part.text + "'");
      }
      out += iri_safe_encode(it->second);
    }
    return out;
  } catch (const EngineError&) {
    throw;
  } catch (const Error& e) {
    throw EngineError(Phase::Execute, e.what());
  }
}

std::optional<Term> evaluate_term_map(const TermGenerationSpec& spec, TermPosition position,
                                      const RowContext& context) {
  try {
    return core_evaluate(spec, position, context, nullptr);
  } catch (const EngineError&) {
    throw;
  } catch (const Error& e) {
    throw EngineError(Phase::Execute, e.what());
  }
}

std::vector<std::optional<Term>> evaluate_term_map_batch(const TermGenerationSpec& spec,
                                                         TermPosition position,
                                                         const Frame& frame,
                                                         const std::string& mint_scope,
                                                         const std::string& base_iri) {
  try {
    std::vector<TemplatePart> compiled;
    const std::vector<TemplatePart>* parts = nullptr;
    if (!spec.constant && spec.template_text) {
      compiled = compile_template(*spec.template_text);
      parts = &compiled;
    }
    std::vector<std::optional<Term>> out;
    out.reserve(frame.row_count());
    for (std::size_t row = 0; row < frame.row_count(); ++row) {
      RowContext ctx{frame, row, mint_scope, base_iri};
      out.push_back(core_evaluate(spec, position, ctx, parts));
    }
    return out;
  } catch (const EngineError&) {
    throw;
  } catch (const Error& e) {
    throw EngineError(Phase::Execute, e.what());
  }
}

// ---------------------------------------------------------------------------
// joins
// ---------------------------------------------------------------------------

std::vector<std::pair<std::size_t, std::size_t>> execute_join(
    const Frame& child, const Frame& parent,
    const std::vector<std::pair<std::string, std::string>>& conditions) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  if (conditions.empty()) {
    for (std::size_t c = 0; c < child.row_count(); ++c) {
      for (std::size_t p = 0; p < parent.row_count(); ++p) pairs.emplace_back(c, p);
    }
    return pairs;
  }

  // Length-prefixed keys keep concatenated values unambiguous.
  auto key_for = [&conditions](const Frame& frame, std::size_t row,
                               bool child_side) -> std::optional<std::string> {
    std::string key;
    for (const auto& [child_col, parent_col] : conditions) {
      const Cell& cell = frame.cell(row, child_side ? child_col : parent_col);
      if (!cell) return std::nullopt;
      key += std::to_string(cell->size()) + ":" + *cell;
    }
    return key;
  };

  std::unordered_map<std::string, std::vector<std::size_t>> parent_rows;
  for (std::size_t p = 0; p < parent.row_count(); ++p) {
    if (auto key = key_for(parent, p, false)) parent_rows[*key].push_back(p);
  }
  for (std::size_t c = 0; c < child.row_count(); ++c) {
    auto key = key_for(child, c, true);
    if (!key) continue;
    auto hit = parent_rows.find(*key);
    if (hit == parent_rows.end()) continue;
    for (std::size_t p : hit->second) pairs.emplace_back(c, p);
  }
  return pairs;
}

// ---------------------------------------------------------------------------
// triples map execution
// ---------------------------------------------------------------------------

namespace {

std::string resolve_location(const std::string& location, const std::string& root) {
  std::filesystem::path p(location);
  if (p.is_absolute() || root.empty()) return location;
  return (std::filesystem::path(root) / p).lexically_normal().string();
}

std::optional<std::string> raw_value_of(const TermGenerationSpec& spec, const RowContext& ctx) {
  if (spec.constant) {
    if (const auto* lit = std::get_if<Literal>(&*spec.constant)) return lit->lexical();
    if (const auto* iri = std::get_if<Iri>(&*spec.constant)) return iri->str();
    return std::get<BlankNode>(*spec.constant).label();
  }
  if (spec.reference) {
    const Cell& cell = ctx.frame.cell(ctx.row, *spec.reference);
    if (!cell) return std::nullopt;
    return *cell;
  }
  if (spec.template_text) {
    auto parts = compile_template(*spec.template_text);
    return raw_from_parts(parts, ctx.frame, ctx.row, /*encode_placeholders=*/false);
  }
  throw Error("term map " + spec.id + " has no value source");
}

std::optional<Term> eval_function_map(const FunctionMapSpec& fm, const RowContext& ctx,
                                      const FunctionRegistry& registry) {
  std::map<std::string, std::optional<std::string>> args;
  for (const auto& [param, value_spec] : fm.bindings) {
    args[param.str()] = raw_value_of(value_spec, ctx);
  }
  std::optional<std::string> result = registry.invoke(fm.function_iri, args);
  if (!result) return std::nullopt;

  TermKind kind = fm.term_type.value_or(TermKind::Literal);
  switch (kind) {
    case TermKind::Iri:
      return Term(shape_iri(*result, ctx.base_iri));
    case TermKind::BlankNode:
      return Term(BlankNode(ctx.mint_scope + "_r" + std::to_string(ctx.row)));
    case TermKind::Literal: {
      TermGenerationSpec shaping;
      shaping.id = fm.id;
      shaping.datatype = fm.datatype;
      shaping.language = fm.language;
      return shape_literal(*result, shaping, ctx);
    }
  }
  throw Error("unreachable term kind");
}

// Evaluates a graph map and checks the result names a graph, then discards
// it: generated statements all land in the default graph.
void check_graph_map(const TermGenerationSpec& gm, const RowContext& ctx) {
  auto term = core_evaluate(gm, TermPosition::Graph, ctx, nullptr);
  if (term && !is_iri(*term)) {
    throw Error("graph map " + gm.id + " produced a non-IRI term");
  }
}

struct ParentLink {
  std::size_t pom_index;
  std::size_t object_index;
  const RefObjectMapSpec* rom;
  std::vector<std::optional<Term>> parent_subjects;           // by parent row
  std::unordered_map<std::size_t, std::vector<std::size_t>> matches;  // child -> parents
};

Graph run_triples_map(const MappingDocument& doc, std::size_t ordinal,
                      FrameResolver& resolver, const FunctionRegistry& registry,
                      const EngineConfig& config) {
  const TriplesMap& tm = doc.triples_maps.at(ordinal);
  const std::string scope = "m" + std::to_string(ordinal);

  LogicalSourceDescriptor descriptor = tm.logical_source;
  if (descriptor.kind == SourceKind::File) {
    descriptor.location = resolve_location(descriptor.location, config.source_root);
  }
  std::shared_ptr<const Frame> frame = resolver.resolve(descriptor);

  // Joins are computed frame-to-frame up front; the row loop then only
  // looks up precomputed matches.
  std::vector<ParentLink> links;
  for (std::size_t pi = 0; pi < tm.predicate_object_maps.size(); ++pi) {
    const auto& pom = tm.predicate_object_maps[pi];
    for (std::size_t oi = 0; oi < pom.objects.size(); ++oi) {
      const auto* rom = std::get_if<RefObjectMapSpec>(&pom.objects[oi]);
      if (!rom) continue;
      const TriplesMap* parent = doc.find(rom->parent_id);
      if (!parent) throw Error("unknown parent triples map " + rom->parent_id);
      std::size_t parent_ordinal = doc.ordinal_of(rom->parent_id);

      LogicalSourceDescriptor parent_descriptor = parent->logical_source;
      if (parent_descriptor.kind == SourceKind::File) {
        parent_descriptor.location =
            resolve_location(parent_descriptor.location, config.source_root);
      }
      std::shared_ptr<const Frame> parent_frame = resolver.resolve(parent_descriptor);

      ParentLink link;
      link.pom_index = pi;
      link.object_index = oi;
      link.rom = rom;
      link.parent_subjects.reserve(parent_frame->row_count());
      for (std::size_t p = 0; p < parent_frame->row_count(); ++p) {
        RowContext pctx{*parent_frame, p, "m" + std::to_string(parent_ordinal) + "_s",
                        config.base_iri};
        try {
          link.parent_subjects.push_back(
              core_evaluate(parent->subject_map.spec, TermPosition::Subject, pctx, nullptr));
        } catch (const Error& e) {
          throw Error("parent triples map " + parent->id + ", row " + std::to_string(p) +
                      ": " + e.what());
        }
      }
      for (const auto& [c, p] : execute_join(*frame, *parent_frame, rom->joins)) {
        link.matches[c].push_back(p);
      }
      links.push_back(std::move(link));
    }
  }
  auto link_for = [&links](std::size_t pi, std::size_t oi) -> const ParentLink* {
    for (const auto& link : links) {
      if (link.pom_index == pi && link.object_index == oi) return &link;
    }
    return nullptr;
  };

  Graph out;
  for (std::size_t row = 0; row < frame->row_count(); ++row) {
    try {
      RowContext subject_ctx{*frame, row, scope + "_s", config.base_iri};
      auto subject_term = core_evaluate(tm.subject_map.spec, TermPosition::Subject,
                                        subject_ctx, nullptr);
      if (!subject_term) continue;
      if (is_literal(*subject_term)) {
        throw Error("subject map produced a literal");
      }
      Resource subject = to_resource(*subject_term);

      for (const auto& gm : tm.subject_map.graph_maps) check_graph_map(gm, subject_ctx);
      for (const auto& cls : tm.subject_map.classes) {
        out.insert(subject, vocab::rdf_type(), cls);
      }

      for (std::size_t pi = 0; pi < tm.predicate_object_maps.size(); ++pi) {
        const auto& pom = tm.predicate_object_maps[pi];
        const std::string pom_scope = scope + "_p" + std::to_string(pi);

        std::vector<Iri> predicates;
        for (std::size_t qi = 0; qi < pom.predicates.size(); ++qi) {
          RowContext ctx{*frame, row, pom_scope + "_q" + std::to_string(qi),
                         config.base_iri};
          auto term = core_evaluate(pom.predicates[qi], TermPosition::Predicate, ctx,
                                    nullptr);
          if (!term) continue;
          const auto* iri = std::get_if<Iri>(&*term);
          if (!iri) {
            throw Error("predicate map " + pom.predicates[qi].id +
                        " produced a non-IRI term");
          }
          predicates.push_back(*iri);
        }
        for (const auto& gm : pom.graph_maps) {
          RowContext ctx{*frame, row, pom_scope + "_g", config.base_iri};
          check_graph_map(gm, ctx);
        }
        if (predicates.empty()) continue;

        std::vector<Term> objects;
        for (std::size_t oi = 0; oi < pom.objects.size(); ++oi) {
          const std::string object_scope = pom_scope + "_o" + std::to_string(oi);
          RowContext ctx{*frame, row, object_scope, config.base_iri};
          if (const auto* spec = std::get_if<TermGenerationSpec>(&pom.objects[oi])) {
            if (auto term = core_evaluate(*spec, TermPosition::Object, ctx, nullptr)) {
              objects.push_back(std::move(*term));
            }
          } else if (const auto* fm = std::get_if<FunctionMapSpec>(&pom.objects[oi])) {
            if (auto term = eval_function_map(*fm, ctx, registry)) {
              objects.push_back(std::move(*term));
            }
          } else {
            const ParentLink* link = link_for(pi, oi);
            auto hit = link->matches.find(row);
            if (hit == link->matches.end()) continue;
            for (std::size_t parent_row : hit->second) {
              const auto& parent_subject = link->parent_subjects[parent_row];
              if (parent_subject) objects.push_back(*parent_subject);
            }
          }
        }

        for (const Iri& predicate : predicates) {
          for (const Term& object : objects) {
            out.insert(subject, predicate, object);
          }
        }
      }
    } catch (const Error& e) {
      throw Error("row " + std::to_string(row) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

Graph execute_triples_map(const MappingDocument& doc, std::size_t ordinal,
                          FrameResolver& resolver, const FunctionRegistry& registry,
                          const EngineConfig& config) {
  try {
    return run_triples_map(doc, ordinal, resolver, registry, config);
  } catch (const EngineError&) {
    throw;
  } catch (const Error& e) {
    throw EngineError(Phase::Execute, "triples map " + doc.triples_maps.at(ordinal).id +
                                          ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// conversion pipeline
// ---------------------------------------------------------------------------

Graph convert(const ConvertOptions& options, FrameResolver& resolver,
              const FunctionRegistry& registry) {
  std::ifstream in(options.mapping_path, std::ios::binary);
  if (!in) {
    throw EngineError(Phase::Render,
                      "cannot read mapping file '" + options.mapping_path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string rendered = render_template(buf.str(), options.variables);

  const std::string base = options.base_iri.value_or("http://example.com/base/");
  Graph mapping_graph;
  try {
    mapping_graph = parse_turtle(rendered, Iri(base));
  } catch (const TurtleError& e) {
    throw EngineError(Phase::Parse, e.what());
  }

  MappingDocument doc;
  try {
    doc = parse_mapping_document(mapping_graph);
  } catch (const MappingError& e) {
    throw EngineError(Phase::Model, e.what());
  }
  if (doc.triples_maps.empty()) {
    throw EngineError(Phase::Model, "mapping document declares no triples maps");
  }
  std::vector<std::string> problems;
  for (const auto& tm : doc.triples_maps) {
    for (auto& p : validate(tm)) problems.push_back(std::move(p));
  }
  if (!problems.empty()) {
    std::string joined;
    for (const auto& p : problems) {
      if (!joined.empty()) joined += "; ";
      joined += p;
    }
    throw EngineError(Phase::Model, "invalid mapping: " + joined);
  }

  EngineConfig config;
  config.base_iri = base;
  config.source_root = std::filesystem::path(options.mapping_path).parent_path().string();

  Graph out;
  if (options.parallel) {
    std::vector<std::future<Graph>> futures;
    futures.reserve(doc.triples_maps.size());
    for (std::size_t i = 0; i < doc.triples_maps.size(); ++i) {
      futures.push_back(std::async(std::launch::async, [&doc, i, &resolver, &registry,
                                                        &config] {
        return execute_triples_map(doc, i, resolver, registry, config);
      }));
    }
    for (auto& f : futures) out.merge(f.get());
  } else {
    for (std::size_t i = 0; i < doc.triples_maps.size(); ++i) {
      out.merge(execute_triples_map(doc, i, resolver, registry, config));
    }
  }
  return out;
}

Graph convert(const ConvertOptions& options) {
  FrameResolver resolver;
  FunctionRegistry registry = builtin_suite();
  return convert(options, resolver, registry);
}

}  // namespace loom
