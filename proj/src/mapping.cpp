#include "loom/mapping.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

namespace loom {

namespace {

Iri rr(const std::string& local) { return Iri(vocab::RR + local); }
Iri rml(const std::string& local) { return Iri(vocab::RML + local); }
Iri ql(const std::string& local) { return Iri(vocab::QL + local); }
Iri fnml_iri(const std::string& local) { return Iri(vocab::FNML + local); }

std::string node_id(const Resource& r) {
  if (const auto* i = std::get_if<Iri>(&r)) return i->str();
  return std::get<BlankNode>(r).label();
}

bool node_is_blank(const Resource& r) { return std::holds_alternative<BlankNode>(r); }

Resource resource_from_id(const std::string& id) {
  if (Iri::valid(id)) return Iri(id);
  return BlankNode(id);
}

// object_of collapses multiple values to nullopt; mapping parsing needs to
// distinguish "absent" from "repeated", so this helper throws on repeats.
std::optional<Term> unique_object(const Graph& g, const Resource& s, const Iri& p,
                                  const std::string& context) {
  auto values = g.objects_of(s, p);
  if (values.empty()) return std::nullopt;
  if (values.size() > 1) {
    throw MappingError(context + " has " + std::to_string(values.size()) + " values for <" +
                       p.str() + ">, at most one is allowed");
  }
  return values[0];
}

std::optional<std::string> unique_literal(const Graph& g, const Resource& s, const Iri& p,
                                          const std::string& context) {
  auto v = unique_object(g, s, p, context);
  if (!v) return std::nullopt;
  const auto* lit = std::get_if<Literal>(&*v);
  if (!lit) {
    throw MappingError(context + ": value of <" + p.str() + "> must be a literal");
  }
  return lit->lexical();
}

std::optional<Iri> unique_iri(const Graph& g, const Resource& s, const Iri& p,
                              const std::string& context) {
  auto v = unique_object(g, s, p, context);
  if (!v) return std::nullopt;
  const auto* iri = std::get_if<Iri>(&*v);
  if (!iri) {
    throw MappingError(context + ": value of <" + p.str() + "> must be an IRI");
  }
  return *iri;
}

Resource require_resource(const Term& t, const std::string& context) {
  if (is_literal(t)) {
    throw MappingError(context + " must be a resource, found literal " + term_to_string(t));
  }
  return to_resource(t);
}

}  // namespace

const TriplesMap* MappingDocument::find(const std::string& id) const {
  for (const auto& tm : triples_maps) {
    if (tm.id == id) return &tm;
  }
  return nullptr;
}

std::size_t MappingDocument::ordinal_of(const std::string& id) const {
  for (std::size_t i = 0; i < triples_maps.size(); ++i) {
    if (triples_maps[i].id == id) return i;
  }
  throw MappingError("unknown triples map id " + id);
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

Graph normalize(const Graph& g) {
  Graph out;
  unsigned fresh = 0;
  auto mint = [&fresh] { return BlankNode("norm" + std::to_string(fresh++)); };

  struct Shortcut {
    Iri shortcut;
    Iri map_property;
    Iri map_class;
  };
  const std::vector<Shortcut> shortcuts = {
      {rr("subject"), rr("subjectMap"), rr("SubjectMap")},
      {rr("predicate"), rr("predicateMap"), rr("PredicateMap")},
      {rr("object"), rr("objectMap"), rr("ObjectMap")},
      {rr("graph"), rr("graphMap"), rr("GraphMap")},
  };

  for (const auto& t : g) {
    bool rewritten = false;
    for (const auto& sc : shortcuts) {
      if (t.predicate == sc.shortcut) {
        BlankNode node = mint();
        out.insert(t.subject, sc.map_property, node);
        out.insert(node, vocab::rdf_type(), sc.map_class);
        out.insert(node, rr("constant"), t.object);
        rewritten = true;
        break;
      }
    }
    if (rewritten) continue;
    if (t.predicate == rr("column")) {
      out.insert(t.subject, rml("reference"), t.object);
      continue;
    }
    out.insert(t);
  }

  // Materialize the types implied by the linking properties.
  struct Implied {
    Iri property;
    Iri object_class;
  };
  const std::vector<Implied> implied = {
      {rml("logicalSource"), rml("LogicalSource")},
      {rr("subjectMap"), rr("SubjectMap")},
      {rr("predicateObjectMap"), rr("PredicateObjectMap")},
      {rr("predicateMap"), rr("PredicateMap")},
      {rr("graphMap"), rr("GraphMap")},
  };
  Graph types;
  for (const auto& t : out) {
    if (t.predicate == rml("logicalSource")) {
      types.insert(t.subject, vocab::rdf_type(), rr("TriplesMap"));
    }
    for (const auto& im : implied) {
      if (t.predicate == im.property && !is_literal(t.object)) {
        types.insert(to_resource(t.object), vocab::rdf_type(), im.object_class);
      }
    }
    if (t.predicate == rr("objectMap") && !is_literal(t.object)) {
      Resource om = to_resource(t.object);
      bool referencing = out.has(om, rr("parentTriplesMap"));
      types.insert(om, vocab::rdf_type(), referencing ? rr("RefObjectMap") : rr("ObjectMap"));
    }
  }
  out.merge(types);
  return out;
}

std::vector<Resource> triples_map_roots(const Graph& g) {
  std::set<std::string> seen;
  std::vector<Resource> roots;
  for (const auto& t : g) {
    if (t.predicate == rml("logicalSource")) {
      if (seen.insert(node_id(t.subject)).second) roots.push_back(t.subject);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Resource& a, const Resource& b) {
    return std::make_pair(node_is_blank(a), node_id(a)) <
           std::make_pair(node_is_blank(b), node_id(b));
  });
  return roots;
}

// ---------------------------------------------------------------------------
// from_rdf
// ---------------------------------------------------------------------------

namespace {

TermGenerationSpec parse_term_spec(const Graph& g, const Resource& node) {
  TermGenerationSpec spec;
  spec.id = node_id(node);
  const std::string ctx = "term map " + spec.id;

  spec.constant = unique_object(g, node, rr("constant"), ctx);
  spec.reference = unique_literal(g, node, rml("reference"), ctx);
  spec.template_text = unique_literal(g, node, rr("template"), ctx);
  if (spec.value_source_count() > 1) {
    throw MappingError(ctx +
                       " has conflicting value sources: rr:constant, rml:reference, and "
                       "rr:template are mutually exclusive");
  }

  if (auto tt = unique_iri(g, node, rr("termType"), ctx)) {
    if (*tt == rr("IRI")) spec.term_type = TermKind::Iri;
    else if (*tt == rr("BlankNode")) spec.term_type = TermKind::BlankNode;
    else if (*tt == rr("Literal")) spec.term_type = TermKind::Literal;
    else throw MappingError(ctx + " has unknown term type <" + tt->str() + ">");
  }
  spec.datatype = unique_iri(g, node, rr("datatype"), ctx);
  spec.language = unique_literal(g, node, rr("language"), ctx);
  if (auto lm = unique_object(g, node, rml("languageMap"), ctx)) {
    Resource lm_node = require_resource(*lm, ctx + " rml:languageMap");
    auto lm_ref = unique_literal(g, lm_node, rml("reference"), ctx + " language map");
    auto lm_const = unique_object(g, lm_node, rr("constant"), ctx + " language map");
    if (lm_ref) {
      spec.language_reference = lm_ref;
    } else if (lm_const) {
      const auto* lit = std::get_if<Literal>(&*lm_const);
      if (!lit) throw MappingError(ctx + ": language map constant must be a literal");
      spec.language = lit->lexical();
    } else {
      throw MappingError(ctx + ": language map needs rml:reference or rr:constant");
    }
  }
  return spec;
}

LogicalSourceDescriptor parse_logical_source(const Graph& g, const Resource& node,
                                             TriplesMap& tm) {
  LogicalSourceDescriptor d;
  d.id = node_id(node);
  const std::string ctx = "logical source " + d.id;

  d.sql_table = unique_literal(g, node, rr("tableName"), ctx);
  auto source = unique_object(g, node, rml("source"), ctx);
  if (!source && !d.sql_table) {
    throw MappingError(ctx + " has no rml:source");
  }

  if (source && is_literal(*source)) {
    d.kind = SourceKind::File;
    d.location = std::get<Literal>(*source).lexical();
  } else if (source) {
    // A resource-valued source describes a non-file backend. Keep its
    // description verbatim so the mapping can be re-serialized.
    tm.source_node = *source;
    Resource src_node = to_resource(*source);
    std::set<std::string> visited;
    std::deque<Resource> queue = {src_node};
    bool sparql = false;
    while (!queue.empty()) {
      Resource current = queue.front();
      queue.pop_front();
      if (!visited.insert(node_id(current)).second) continue;
      for (const auto& t : g) {
        if (!(t.subject == current)) continue;
        tm.source_details.push_back(t);
        if (t.predicate.str() == vocab::SD + "endpoint") {
          sparql = true;
          if (const auto* endpoint = std::get_if<Iri>(&t.object)) d.location = endpoint->str();
        }
        if (!is_literal(t.object)) queue.push_back(to_resource(t.object));
      }
    }
    d.kind = sparql ? SourceKind::SparqlService : SourceKind::Sql;
    if (d.location.empty()) d.location = node_id(src_node);
  } else {
    d.kind = SourceKind::Sql;  // rr:tableName without rml:source
  }

  if (auto f = unique_iri(g, node, rml("referenceFormulation"), ctx)) {
    if (*f == ql("CSV")) d.formulation = ReferenceFormulation::Csv;
    else if (*f == ql("JSONPath")) d.formulation = ReferenceFormulation::JsonPath;
    else if (*f == ql("XPath")) d.formulation = ReferenceFormulation::XPath;
    else throw MappingError(ctx + " has unsupported reference formulation <" + f->str() + ">");
  }
  d.iterator = unique_literal(g, node, rml("iterator"), ctx);
  return d;
}

SubjectMap parse_subject_map(const Graph& g, const Resource& node) {
  SubjectMap sm;
  sm.id = node_id(node);
  sm.spec = parse_term_spec(g, node);
  for (const auto& c : g.objects_of(node, rr("class"))) {
    const auto* iri = std::get_if<Iri>(&c);
    if (!iri) throw MappingError("subject map " + sm.id + ": rr:class value must be an IRI");
    sm.classes.push_back(*iri);
  }
  std::sort(sm.classes.begin(), sm.classes.end());
  for (const auto& gm : g.objects_of(node, rr("graphMap"))) {
    sm.graph_maps.push_back(
        parse_term_spec(g, require_resource(gm, "graph map of subject map " + sm.id)));
  }
  return sm;
}

FunctionMapSpec parse_function_map(const Graph& g, const Resource& om_node) {
  const std::string id = node_id(om_node);
  const std::string ctx = "function map " + id;
  auto fv = unique_object(g, om_node, fnml_iri("functionValue"), ctx);
  Resource fv_node = require_resource(*fv, ctx + " fnml:functionValue");

  std::optional<Iri> function_iri;
  std::vector<std::pair<Iri, TermGenerationSpec>> bindings;
  const Iri executes(vocab::FNO + "executes");

  for (const auto& pom_term : g.objects_of(fv_node, rr("predicateObjectMap"))) {
    Resource pom = require_resource(pom_term, ctx + " predicate-object map");
    std::vector<Iri> param_iris;
    for (const auto& pm_term : g.objects_of(pom, rr("predicateMap"))) {
      Resource pm = require_resource(pm_term, ctx + " predicate map");
      TermGenerationSpec pm_spec = parse_term_spec(g, pm);
      if (!pm_spec.constant || !is_iri(*pm_spec.constant)) {
        throw MappingError(ctx + ": function parameter predicates must be constant IRIs");
      }
      param_iris.push_back(std::get<Iri>(*pm_spec.constant));
    }
    if (param_iris.empty()) {
      throw MappingError(ctx + ": parameter predicate-object map lacks a predicate");
    }
    std::vector<TermGenerationSpec> value_specs;
    for (const auto& om_term : g.objects_of(pom, rr("objectMap"))) {
      value_specs.push_back(
          parse_term_spec(g, require_resource(om_term, ctx + " parameter object map")));
    }
    if (value_specs.empty()) {
      throw MappingError(ctx + ": parameter predicate-object map lacks an object");
    }
    for (const auto& param : param_iris) {
      for (const auto& value : value_specs) {
        if (param == executes) {
          if (!value.constant || !is_iri(*value.constant)) {
            throw MappingError(ctx + ": fno:executes value must be a constant function IRI");
          }
          Iri fn = std::get<Iri>(*value.constant);
          if (function_iri && !(*function_iri == fn)) {
            throw MappingError(ctx + ": multiple conflicting fno:executes declarations");
          }
          function_iri = fn;
        } else {
          bindings.emplace_back(param, value);
        }
      }
    }
  }
  if (!function_iri) {
    throw MappingError(ctx + ": no fno:executes declaration names the function to run");
  }
  std::sort(bindings.begin(), bindings.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  TermGenerationSpec own = parse_term_spec(g, om_node);
  return FunctionMapSpec{id, *function_iri, std::move(bindings), own.term_type, own.datatype,
                         own.language};
}

RefObjectMapSpec parse_ref_object_map(const Graph& g, const Resource& om_node) {
  RefObjectMapSpec rom;
  rom.id = node_id(om_node);
  const std::string ctx = "referencing object map " + rom.id;
  auto parent = unique_object(g, om_node, rr("parentTriplesMap"), ctx);
  Resource parent_node = require_resource(*parent, ctx + " rr:parentTriplesMap");
  if (!g.has(parent_node, rml("logicalSource"))) {
    throw MappingError(ctx + ": parent triples map " + node_id(parent_node) +
                       " does not exist or has no logical source");
  }
  rom.parent_id = node_id(parent_node);
  for (const auto& jc : g.objects_of(om_node, rr("joinCondition"))) {
    Resource j = require_resource(jc, ctx + " join condition");
    auto child = unique_literal(g, j, rr("child"), ctx + " join condition");
    auto parent_col = unique_literal(g, j, rr("parent"), ctx + " join condition");
    if (!child || !parent_col) {
      throw MappingError(ctx + ": join condition needs both rr:child and rr:parent");
    }
    rom.joins.emplace_back(*child, *parent_col);
  }
  std::sort(rom.joins.begin(), rom.joins.end());
  return rom;
}

PredicateObjectMap parse_pom(const Graph& g, const Resource& node) {
  PredicateObjectMap pom;
  pom.id = node_id(node);
  for (const auto& pm : g.objects_of(node, rr("predicateMap"))) {
    pom.predicates.push_back(
        parse_term_spec(g, require_resource(pm, "predicate map of " + pom.id)));
  }
  for (const auto& om_term : g.objects_of(node, rr("objectMap"))) {
    Resource om = require_resource(om_term, "object map of " + pom.id);
    if (g.has(om, rr("parentTriplesMap"))) {
      pom.objects.emplace_back(parse_ref_object_map(g, om));
    } else if (g.has(om, fnml_iri("functionValue"))) {
      pom.objects.emplace_back(parse_function_map(g, om));
    } else {
      pom.objects.emplace_back(parse_term_spec(g, om));
    }
  }
  for (const auto& gm : g.objects_of(node, rr("graphMap"))) {
    pom.graph_maps.push_back(
        parse_term_spec(g, require_resource(gm, "graph map of " + pom.id)));
  }
  return pom;
}

}  // namespace

TriplesMap triples_map_from_rdf(const Graph& g_raw, const Resource& root) {
  Graph g = normalize(g_raw);
  TriplesMap tm;
  tm.id = node_id(root);
  tm.id_is_blank = node_is_blank(root);

  auto ls = unique_object(g, root, rml("logicalSource"), "triples map " + tm.id);
  if (!ls) {
    throw MappingError("triples map " + tm.id + " has no rml:logicalSource");
  }
  tm.logical_source =
      parse_logical_source(g, require_resource(*ls, "logical source of " + tm.id), tm);

  auto subject_maps = g.objects_of(root, rr("subjectMap"));
  if (subject_maps.empty()) {
    throw MappingError("triples map " + tm.id + " has no subject map");
  }
  if (subject_maps.size() > 1) {
    throw MappingError("triples map " + tm.id + " has " +
                       std::to_string(subject_maps.size()) + " subject maps, exactly one is "
                       "allowed");
  }
  tm.subject_map =
      parse_subject_map(g, require_resource(subject_maps[0], "subject map of " + tm.id));

  for (const auto& pom : g.objects_of(root, rr("predicateObjectMap"))) {
    tm.predicate_object_maps.push_back(
        parse_pom(g, require_resource(pom, "predicate-object map of " + tm.id)));
  }
  return tm;
}

MappingDocument parse_mapping_document(const Graph& g) {
  Graph normalized = normalize(g);
  MappingDocument doc;
  for (const auto& root : triples_map_roots(normalized)) {
    doc.triples_maps.push_back(triples_map_from_rdf(normalized, root));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// to_rdf
// ---------------------------------------------------------------------------

namespace {

void emit_term_spec(Graph& out, const TermGenerationSpec& spec, const Iri& map_class) {
  Resource node = resource_from_id(spec.id);
  out.insert(node, vocab::rdf_type(), map_class);
  if (spec.constant) out.insert(node, rr("constant"), *spec.constant);
  if (spec.reference) out.insert(node, rml("reference"), Literal(*spec.reference));
  if (spec.template_text) out.insert(node, rr("template"), Literal(*spec.template_text));
  if (spec.term_type) {
    Iri tt = *spec.term_type == TermKind::Iri
                 ? rr("IRI")
                 : (*spec.term_type == TermKind::BlankNode ? rr("BlankNode") : rr("Literal"));
    out.insert(node, rr("termType"), tt);
  }
  if (spec.datatype) out.insert(node, rr("datatype"), *spec.datatype);
  if (spec.language) out.insert(node, rr("language"), Literal(*spec.language));
  if (spec.language_reference) {
    BlankNode lm(spec.id + ".lang");
    out.insert(node, rml("languageMap"), lm);
    out.insert(lm, rml("reference"), Literal(*spec.language_reference));
  }
}

void emit_function_map(Graph& out, const FunctionMapSpec& fm) {
  Resource node = resource_from_id(fm.id);
  out.insert(node, vocab::rdf_type(), rr("ObjectMap"));
  BlankNode fv(fm.id + ".fv");
  out.insert(node, fnml_iri("functionValue"), fv);

  auto executes_pom = BlankNode(fm.id + ".fv.p0");
  out.insert(fv, rr("predicateObjectMap"), executes_pom);
  out.insert(executes_pom, vocab::rdf_type(), rr("PredicateObjectMap"));
  BlankNode executes_pm(fm.id + ".fv.p0.pm");
  out.insert(executes_pom, rr("predicateMap"), executes_pm);
  out.insert(executes_pm, vocab::rdf_type(), rr("PredicateMap"));
  out.insert(executes_pm, rr("constant"), Iri(vocab::FNO + "executes"));
  BlankNode executes_om(fm.id + ".fv.p0.om");
  out.insert(executes_pom, rr("objectMap"), executes_om);
  out.insert(executes_om, vocab::rdf_type(), rr("ObjectMap"));
  out.insert(executes_om, rr("constant"), fm.function_iri);

  std::size_t i = 1;
  for (const auto& [param, spec] : fm.bindings) {
    BlankNode pom(fm.id + ".fv.p" + std::to_string(i));
    out.insert(fv, rr("predicateObjectMap"), pom);
    out.insert(pom, vocab::rdf_type(), rr("PredicateObjectMap"));
    BlankNode pm(fm.id + ".fv.p" + std::to_string(i) + ".pm");
    out.insert(pom, rr("predicateMap"), pm);
    out.insert(pm, vocab::rdf_type(), rr("PredicateMap"));
    out.insert(pm, rr("constant"), param);
    Resource om = resource_from_id(spec.id);
    out.insert(pom, rr("objectMap"), to_term(om));
    emit_term_spec(out, spec, rr("ObjectMap"));
    ++i;
  }

  if (fm.term_type) {
    Iri tt = *fm.term_type == TermKind::Iri
                 ? rr("IRI")
                 : (*fm.term_type == TermKind::BlankNode ? rr("BlankNode") : rr("Literal"));
    out.insert(node, rr("termType"), tt);
  }
  if (fm.datatype) out.insert(node, rr("datatype"), *fm.datatype);
  if (fm.language) out.insert(node, rr("language"), Literal(*fm.language));
}

}  // namespace

Graph triples_map_to_rdf(const TriplesMap& m) {
  Graph out;
  Resource tm_node = m.id_is_blank ? Resource(BlankNode(m.id)) : resource_from_id(m.id);
  out.insert(tm_node, vocab::rdf_type(), rr("TriplesMap"));

  const auto& ls = m.logical_source;
  Resource ls_node = resource_from_id(ls.id);
  out.insert(tm_node, rml("logicalSource"), to_term(ls_node));
  out.insert(ls_node, vocab::rdf_type(), rml("LogicalSource"));
  if (m.source_node) {
    out.insert(ls_node, rml("source"), *m.source_node);
    for (const auto& t : m.source_details) out.insert(t);
  } else if (ls.kind == SourceKind::File) {
    out.insert(ls_node, rml("source"), Literal(ls.location));
  }
  if (ls.formulation) {
    out.insert(ls_node, rml("referenceFormulation"), ql(formulation_name(*ls.formulation)));
  }
  if (ls.iterator) out.insert(ls_node, rml("iterator"), Literal(*ls.iterator));
  if (ls.sql_table) out.insert(ls_node, rr("tableName"), Literal(*ls.sql_table));

  Resource sm_node = resource_from_id(m.subject_map.id);
  out.insert(tm_node, rr("subjectMap"), to_term(sm_node));
  emit_term_spec(out, m.subject_map.spec, rr("SubjectMap"));
  for (const auto& c : m.subject_map.classes) out.insert(sm_node, rr("class"), c);
  for (const auto& gm : m.subject_map.graph_maps) {
    out.insert(sm_node, rr("graphMap"), to_term(resource_from_id(gm.id)));
    emit_term_spec(out, gm, rr("GraphMap"));
  }

  for (const auto& pom : m.predicate_object_maps) {
    Resource pom_node = resource_from_id(pom.id);
    out.insert(tm_node, rr("predicateObjectMap"), to_term(pom_node));
    out.insert(pom_node, vocab::rdf_type(), rr("PredicateObjectMap"));
    for (const auto& pm : pom.predicates) {
      out.insert(pom_node, rr("predicateMap"), to_term(resource_from_id(pm.id)));
      emit_term_spec(out, pm, rr("PredicateMap"));
    }
    for (const auto& obj : pom.objects) {
      if (const auto* spec = std::get_if<TermGenerationSpec>(&obj)) {
        out.insert(pom_node, rr("objectMap"), to_term(resource_from_id(spec->id)));
        emit_term_spec(out, *spec, rr("ObjectMap"));
      } else if (const auto* rom = std::get_if<RefObjectMapSpec>(&obj)) {
        Resource om_node = resource_from_id(rom->id);
        out.insert(pom_node, rr("objectMap"), to_term(om_node));
        out.insert(om_node, vocab::rdf_type(), rr("RefObjectMap"));
        out.insert(om_node, rr("parentTriplesMap"), to_term(resource_from_id(rom->parent_id)));
        std::size_t j = 0;
        for (const auto& [child, parent] : rom->joins) {
          BlankNode jc(rom->id + ".j" + std::to_string(j++));
          out.insert(om_node, rr("joinCondition"), jc);
          out.insert(jc, rr("child"), Literal(child));
          out.insert(jc, rr("parent"), Literal(parent));
        }
      } else {
        out.insert(pom_node, rr("objectMap"),
                   to_term(resource_from_id(std::get<FunctionMapSpec>(obj).id)));
        emit_function_map(out, std::get<FunctionMapSpec>(obj));
      }
    }
    for (const auto& gm : pom.graph_maps) {
      out.insert(pom_node, rr("graphMap"), to_term(resource_from_id(gm.id)));
      emit_term_spec(out, gm, rr("GraphMap"));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// induced subgraph
// ---------------------------------------------------------------------------

Graph induced_mapping_subgraph(const Graph& normalized, const Resource& root) {
  // Predicates that are part of the mapping shape. Objects of the ones in
  // `traverse` are themselves map nodes to visit; rr:parentTriplesMap is
  // included as an edge but never followed.
  const std::set<std::string> keep = {
      vocab::RDF + "type", vocab::RML + "logicalSource", vocab::RML + "source",
      vocab::RML + "referenceFormulation", vocab::RML + "iterator", vocab::RML + "reference",
      vocab::RML + "languageMap", vocab::RR + "tableName", vocab::RR + "subjectMap",
      vocab::RR + "predicateObjectMap", vocab::RR + "predicateMap", vocab::RR + "objectMap",
      vocab::RR + "graphMap", vocab::RR + "class", vocab::RR + "constant",
      vocab::RR + "template", vocab::RR + "termType", vocab::RR + "datatype",
      vocab::RR + "language", vocab::RR + "parentTriplesMap", vocab::RR + "joinCondition",
      vocab::RR + "child", vocab::RR + "parent", vocab::FNML + "functionValue"};
  const std::set<std::string> traverse = {
      vocab::RML + "logicalSource", vocab::RML + "languageMap", vocab::RR + "subjectMap",
      vocab::RR + "predicateObjectMap", vocab::RR + "predicateMap", vocab::RR + "objectMap",
      vocab::RR + "graphMap", vocab::RR + "joinCondition", vocab::FNML + "functionValue"};
  // rdf:type is kept only for the canonical map classes; other types on map
  // nodes are user annotations outside the mapping shape.
  const std::set<std::string> map_classes = {
      vocab::RR + "TriplesMap", vocab::RML + "LogicalSource", vocab::RR + "SubjectMap",
      vocab::RR + "PredicateObjectMap", vocab::RR + "PredicateMap", vocab::RR + "ObjectMap",
      vocab::RR + "RefObjectMap", vocab::RR + "GraphMap"};

  Graph out;
  std::set<std::string> visited;
  std::set<std::string> source_mode;  // nodes reached via rml:source: keep everything
  std::deque<Resource> queue = {root};

  while (!queue.empty()) {
    Resource node = queue.front();
    queue.pop_front();
    std::string id = node_id(node);
    if (!visited.insert(id).second) continue;
    bool in_source_mode = source_mode.count(id) > 0;

    for (const auto& t : normalized) {
      if (!(t.subject == node)) continue;
      const std::string pred = t.predicate.str();
      if (in_source_mode) {
        out.insert(t);
        if (!is_literal(t.object)) {
          source_mode.insert(node_id(to_resource(t.object)));
          queue.push_back(to_resource(t.object));
        }
        continue;
      }
      if (!keep.count(pred)) continue;
      if (pred == vocab::RDF + "type" &&
          (is_literal(t.object) || !map_classes.count(node_id(to_resource(t.object))))) {
        continue;
      }
      out.insert(t);
      if (is_literal(t.object)) continue;
      Resource obj = to_resource(t.object);
      if (pred == vocab::RML + "source") {
        source_mode.insert(node_id(obj));
        queue.push_back(obj);
      } else if (traverse.count(pred)) {
        queue.push_back(obj);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

namespace {

bool valid_language_tag(const std::string& tag) {
  std::size_t i = 0;
  auto run = [&](bool first) {
    std::size_t len = 0;
    while (i < tag.size() && tag[i] != '-') {
      char c = tag[i];
      bool ok = first ? std::isalpha(static_cast<unsigned char>(c)) != 0
                      : std::isalnum(static_cast<unsigned char>(c)) != 0;
      if (!ok) return std::size_t{0};
      ++i;
      ++len;
    }
    return len;
  };
  std::size_t len = run(true);
  if (len == 0 || len > 8) return false;
  while (i < tag.size()) {
    ++i;  // skip '-'
    std::size_t sub = run(false);
    if (sub == 0 || sub > 8) return false;
  }
  return true;
}

void validate_spec(const TermGenerationSpec& spec, const std::string& role,
                   std::vector<std::string>& out) {
  const std::string where = role + " " + spec.id;
  int sources = spec.value_source_count();
  if (sources != 1) {
    out.push_back(where + ": exactly one of rr:constant, rml:reference, rr:template is "
                  "required (found " + std::to_string(sources) + ")");
  }
  bool has_language = spec.language || spec.language_reference;
  if (spec.datatype && has_language) {
    out.push_back(where + ": rr:datatype and rr:language are mutually exclusive");
  }
  if (has_language && spec.term_type && *spec.term_type != TermKind::Literal) {
    out.push_back(where + ": a language tag requires term type rr:Literal");
  }
  if (spec.language && !valid_language_tag(*spec.language)) {
    out.push_back(where + ": invalid language tag '" + *spec.language + "'");
  }

  if (role == "subject map") {
    if (spec.term_type == TermKind::Literal) {
      out.push_back(where + ": subjects cannot be literals");
    }
    if (spec.constant && is_literal(*spec.constant)) {
      out.push_back(where + ": constant subject must be an IRI or blank node");
    }
    if (spec.datatype || has_language) {
      out.push_back(where + ": datatype/language apply only to object maps");
    }
  } else if (role == "predicate map") {
    if (spec.term_type && *spec.term_type != TermKind::Iri) {
      out.push_back(where + ": predicates must be IRIs");
    }
    if (spec.constant && !is_iri(*spec.constant)) {
      out.push_back(where + ": constant predicate must be an IRI");
    }
    if (spec.datatype || has_language) {
      out.push_back(where + ": datatype/language apply only to object maps");
    }
  } else if (role == "graph map") {
    if (spec.term_type && *spec.term_type != TermKind::Iri) {
      out.push_back(where + ": graph terms must be IRIs");
    }
    if (spec.constant && !is_iri(*spec.constant)) {
      out.push_back(where + ": constant graph must be an IRI");
    }
    if (spec.datatype || has_language) {
      out.push_back(where + ": datatype/language apply only to object maps");
    }
  }
}

}  // namespace

std::vector<std::string> validate(const TriplesMap& m) {
  std::vector<std::string> out;

  const auto& ls = m.logical_source;
  if (ls.kind == SourceKind::File) {
    if (!ls.formulation) {
      out.push_back("logical source " + ls.id + ": missing rml:referenceFormulation");
    } else if (*ls.formulation == ReferenceFormulation::Csv) {
      if (ls.iterator) {
        out.push_back("logical source " + ls.id + ": CSV sources take no rml:iterator");
      }
    } else if (!ls.iterator) {
      out.push_back("logical source " + ls.id + ": " + formulation_name(*ls.formulation) +
                    " sources require rml:iterator");
    }
  }

  validate_spec(m.subject_map.spec, "subject map", out);
  for (const auto& gm : m.subject_map.graph_maps) validate_spec(gm, "graph map", out);

  for (const auto& pom : m.predicate_object_maps) {
    if (pom.predicates.empty()) {
      out.push_back("predicate-object map " + pom.id + ": needs at least one predicate map");
    }
    if (pom.objects.empty()) {
      out.push_back("predicate-object map " + pom.id + ": needs at least one object map");
    }
    for (const auto& pm : pom.predicates) validate_spec(pm, "predicate map", out);
    for (const auto& obj : pom.objects) {
      if (const auto* spec = std::get_if<TermGenerationSpec>(&obj)) {
        validate_spec(*spec, "object map", out);
      } else if (const auto* fm = std::get_if<FunctionMapSpec>(&obj)) {
        for (const auto& [param, value] : fm->bindings) {
          (void)param;
          validate_spec(value, "function parameter", out);
        }
        if (fm->datatype && fm->language) {
          out.push_back("function map " + fm->id +
                        ": rr:datatype and rr:language are mutually exclusive");
        }
        if (fm->language && !valid_language_tag(*fm->language)) {
          out.push_back("function map " + fm->id + ": invalid language tag '" + *fm->language +
                        "'");
        }
      }
      // RefObjectMapSpec carries no term spec to check; column existence is
      // a runtime concern.
    }
    for (const auto& gm : pom.graph_maps) validate_spec(gm, "graph map", out);
  }
  return out;
}

}  // namespace loom
