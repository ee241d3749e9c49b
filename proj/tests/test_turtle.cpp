#include <doctest.h>

#include "loom/isomorphism.hpp"
#include "loom/rdf.hpp"
#include "loom/turtle.hpp"

using namespace loom;

namespace {

const char* kMappingListing = R"ttl(
@prefix ex: <https://foo.org/example/> .
@prefix rr: <http://www.w3.org/ns/r2rml#> .
@prefix rml: <http://semweb.mmlab.be/ns/rml#> .
@prefix ql: <http://semweb.mmlab.be/ns/ql#> .
@prefix foaf: <http://xmlns.com/foaf/0.1/> .

ex:Tm a rr:TriplesMap ;
      rml:logicalSource [ rml:source 'student.csv' ; rml:referenceFormulation ql:CSV ] ;
      rr:subjectMap ex:SM ;
      rr:predicateObjectMap ex:POM .

ex:SM a rr:SubjectMap ;
      rr:template 'https://foo.org/d/{ID}' ;
      rr:class foaf:Person .

ex:PM a rr:PredicateMap ;
      rr:constant foaf:name .

ex:OM a rr:ObjectMap ;
      rml:reference 'name' ;
      rr:termType rr:Literal .

ex:POM a rr:PredicateObjectMap ;
      rr:predicateMap ex:PM ;
      rr:objectMap ex:OM .
)ttl";

Iri ex(const std::string& local) { return Iri("https://foo.org/example/" + local); }
Iri rr(const std::string& local) { return Iri(vocab::RR + local); }
Iri rml(const std::string& local) { return Iri(vocab::RML + local); }

}  // namespace

TEST_CASE("parses a complete subject/predicate/object mapping document") {
  Graph g = parse_turtle(kMappingListing);

  CHECK(g.contains({ex("SM"), vocab::rdf_type(), rr("SubjectMap")}));
  CHECK(g.contains({ex("SM"), rr("template"), Literal("https://foo.org/d/{ID}")}));
  CHECK(g.contains({ex("SM"), rr("class"), Iri("http://xmlns.com/foaf/0.1/Person")}));
  CHECK(g.contains({ex("PM"), rr("constant"), Iri("http://xmlns.com/foaf/0.1/name")}));
  CHECK(g.contains({ex("OM"), rml("reference"), Literal("name")}));
  CHECK(g.contains({ex("OM"), rr("termType"), rr("Literal")}));
  CHECK(g.contains({ex("POM"), rr("predicateMap"), ex("PM")}));
  CHECK(g.contains({ex("POM"), rr("objectMap"), ex("OM")}));
  CHECK(g.contains({ex("Tm"), rr("subjectMap"), ex("SM")}));

  // The logical source is a blank-node property list hanging off ex:Tm.
  auto ls = g.object_of(Resource(ex("Tm")), rml("logicalSource"));
  REQUIRE(ls.has_value());
  REQUIRE(is_blank(*ls));
  Resource node = to_resource(*ls);
  CHECK(g.contains({node, rml("source"), Literal("student.csv")}));
  CHECK(g.contains({node, rml("referenceFormulation"), Iri(vocab::QL + "CSV")}));

  CHECK(g.size() == 17);
}

TEST_CASE("empty document yields an empty graph") {
  CHECK(parse_turtle("").empty());
  CHECK(parse_turtle("   # only a comment\n").empty());
}

TEST_CASE("sparql-style directives and case-insensitive keywords") {
  Graph g = parse_turtle("PREFIX ex: <http://x/>\nBASE <http://base/>\nex:a ex:p <rel> .");
  CHECK(g.contains({Iri("http://x/a"), Iri("http://x/p"), Iri("http://base/rel")}));
}

TEST_CASE("base declaration resolves relative iris") {
  Graph g = parse_turtle("@base <http://ex.org/dir/> .\n<a> <p> <../up> .");
  CHECK(g.contains({Iri("http://ex.org/dir/a"), Iri("http://ex.org/dir/p"),
                    Iri("http://ex.org/up")}));
}

TEST_CASE("explicit base argument is used when the document has none") {
  Graph g = parse_turtle("<s> <p> <o> .", Iri("http://b.example/root/"));
  CHECK(g.contains({Iri("http://b.example/root/s"), Iri("http://b.example/root/p"),
                    Iri("http://b.example/root/o")}));
}

TEST_CASE("relative iri without any base is an error") {
  CHECK_THROWS_AS(parse_turtle("<s> <http://x/p> <http://x/o> ."), TurtleError);
}

TEST_CASE("object and predicate lists expand") {
  Graph g = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p ex:a, ex:b ; ex:q ex:c .");
  CHECK(g.size() == 3);
  CHECK(g.contains({Iri("http://x/s"), Iri("http://x/p"), Iri("http://x/a")}));
  CHECK(g.contains({Iri("http://x/s"), Iri("http://x/p"), Iri("http://x/b")}));
  CHECK(g.contains({Iri("http://x/s"), Iri("http://x/q"), Iri("http://x/c")}));
}

TEST_CASE("string quote styles and escapes") {
  Graph g = parse_turtle(R"(@prefix ex: <http://x/> .
ex:s ex:p1 "double" .
ex:s ex:p2 'single' .
ex:s ex:p3 """long
"quoted" text""" .
ex:s ex:p4 '''other
long''' .
ex:s ex:p5 "tab\there\nnewline \"q\" \\ é \U0001F600" .
)");
  Iri s("http://x/s");
  CHECK(g.contains({s, Iri("http://x/p1"), Literal("double")}));
  CHECK(g.contains({s, Iri("http://x/p2"), Literal("single")}));
  CHECK(g.contains({s, Iri("http://x/p3"), Literal("long\n\"quoted\" text")}));
  CHECK(g.contains({s, Iri("http://x/p4"), Literal("other\nlong")}));
  CHECK(g.contains({s, Iri("http://x/p5"),
                    Literal("tab\there\nnewline \"q\" \\ \xC3\xA9 \xF0\x9F\x98\x80")}));
}

TEST_CASE("language tags and datatypes") {
  Graph g = parse_turtle(R"(@prefix ex: <http://x/> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
ex:s ex:p "hello"@en ; ex:q "42"^^xsd:int ; ex:r "d"^^<http://x/dt> .
)");
  Iri s("http://x/s");
  CHECK(g.contains({s, Iri("http://x/p"), Literal::tagged("hello", "en")}));
  CHECK(g.contains({s, Iri("http://x/q"), Literal("42", Iri(vocab::XSD + "int"))}));
  CHECK(g.contains({s, Iri("http://x/r"), Literal("d", Iri("http://x/dt"))}));
}

TEST_CASE("numeric and boolean shorthand") {
  Graph g = parse_turtle(R"(@prefix ex: <http://x/> .
ex:s ex:i 42 ; ex:n -7 ; ex:d 3.14 ; ex:e 1.2e3 ; ex:t true ; ex:f false .
)");
  Iri s("http://x/s");
  CHECK(g.contains({s, Iri("http://x/i"), Literal("42", vocab::xsd_integer())}));
  CHECK(g.contains({s, Iri("http://x/n"), Literal("-7", vocab::xsd_integer())}));
  CHECK(g.contains({s, Iri("http://x/d"), Literal("3.14", vocab::xsd_decimal())}));
  CHECK(g.contains({s, Iri("http://x/e"), Literal("1.2e3", vocab::xsd_double())}));
  CHECK(g.contains({s, Iri("http://x/t"), Literal("true", vocab::xsd_boolean())}));
  CHECK(g.contains({s, Iri("http://x/f"), Literal("false", vocab::xsd_boolean())}));
}

TEST_CASE("nested blank node property lists") {
  Graph g = parse_turtle(R"(@prefix ex: <http://x/> .
ex:s ex:p [ ex:q [ ex:r "deep" ] ; ex:t "mid" ] .
[] ex:standalone "anon subject" .
)");
  CHECK(g.size() == 5);
  auto mid = g.object_of(Resource(Iri("http://x/s")), Iri("http://x/p"));
  REQUIRE(mid.has_value());
  REQUIRE(is_blank(*mid));
  auto inner = g.object_of(to_resource(*mid), Iri("http://x/q"));
  REQUIRE(inner.has_value());
  CHECK(g.contains({to_resource(*inner), Iri("http://x/r"), Literal("deep")}));
}

TEST_CASE("blank node labels are deterministic") {
  // Parsing is a pure function of the text: the same document yields the
  // same graph, equal labels included, no matter how often it is parsed.
  const std::string doc = "@prefix ex: <http://x/> .\n_:n ex:p ex:o .\n[] ex:p ex:q .";
  Graph a = parse_turtle(doc);
  Graph b = parse_turtle(doc);
  CHECK(a == b);

  // Written labels and anonymous nodes draw from disjoint label spaces.
  Graph g = parse_turtle("@prefix ex: <http://x/> .\n_:a0 ex:p [] .");
  const auto& t = *g.begin();
  CHECK(std::get<BlankNode>(t.subject).label() != std::get<BlankNode>(t.object).label());
}

TEST_CASE("same label within one parse is one node") {
  Graph g = parse_turtle("@prefix ex: <http://x/> .\n_:n ex:p ex:a .\n_:n ex:p ex:b .");
  CHECK(g.size() == 2);
  CHECK(g.begin()->subject == std::next(g.begin())->subject);
}

TEST_CASE("collections are rejected with a clear error") {
  CHECK_THROWS_AS(parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p (1 2 3) ."), TurtleError);
  try {
    parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p (1 2) .");
    FAIL("expected TurtleError");
  } catch (const TurtleError& e) {
    CHECK(std::string(e.what()).find("collection") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p \"unterminated .");
    FAIL("expected TurtleError");
  } catch (const TurtleError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("2:") != std::string::npos);
  }
}

TEST_CASE("undefined prefix is an error") {
  CHECK_THROWS_AS(parse_turtle("nope:s <http://x/p> <http://x/o> ."), TurtleError);
}

TEST_CASE("langString with datatype annotation instead of tag is rejected") {
  CHECK_THROWS_AS(
      parse_turtle("@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
                   "<http://x/s> <http://x/p> \"v\"^^rdf:langString ."),
      TurtleError);
}

TEST_CASE("ntriples output of a single plain literal triple") {
  Graph g;
  g.insert(Iri("https://foo.org/example/a"), Iri("https://foo.org/example/p"), Literal("x"));
  CHECK(to_ntriples(g) ==
        "<https://foo.org/example/a> <https://foo.org/example/p> \"x\" .\n");
}

TEST_CASE("ntriples of an empty graph is the empty string") {
  CHECK(to_ntriples(Graph{}).empty());
  CHECK(serialize(Graph{}, Format::NTriples).empty());
}

TEST_CASE("ntriples escapes and annotates") {
  Graph g;
  Iri s("http://x/s"), p("http://x/p");
  g.insert(s, p, Literal("line\nbreak \"q\" \\ tab\t"));
  g.insert(s, p, Literal::tagged("hola", "es"));
  g.insert(s, p, Literal("5", vocab::xsd_integer()));
  g.insert(s, p, BlankNode("b0"));
  std::string nt = to_ntriples(g);
  CHECK(nt.find("\"line\\nbreak \\\"q\\\" \\\\ tab\\t\"") != std::string::npos);
  CHECK(nt.find("\"hola\"@es") != std::string::npos);
  CHECK(nt.find("\"5\"^^<http://www.w3.org/2001/XMLSchema#integer>") != std::string::npos);
  CHECK(nt.find("_:b0") != std::string::npos);
}

TEST_CASE("ntriples output is sorted and ends each line with a dot") {
  Graph g;
  g.insert(Iri("http://x/b"), Iri("http://x/p"), Literal("2"));
  g.insert(Iri("http://x/a"), Iri("http://x/p"), Literal("1"));
  std::string nt = to_ntriples(g);
  std::size_t first = nt.find("http://x/a");
  std::size_t second = nt.find("http://x/b");
  CHECK(first < second);
  CHECK(nt.rfind(" .\n") == nt.size() - 3);
}

TEST_CASE("turtle round-trips through parse and serialize") {
  Graph original = parse_turtle(kMappingListing);
  std::string ttl = serialize(original, Format::Turtle);
  Graph again = parse_turtle(ttl);
  CHECK(isomorphic(original, again));

  std::string nt = serialize(original, Format::NTriples);
  CHECK(isomorphic(parse_turtle(nt), original));
}

TEST_CASE("nquads output equals ntriples for triple-only graphs") {
  Graph g = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p ex:o , \"v\"@en .");
  CHECK(serialize(g, Format::NQuads) == serialize(g, Format::NTriples));
}

TEST_CASE("format name mapping covers the cli spellings") {
  CHECK(format_from_name("nt") == Format::NTriples);
  CHECK(format_from_name("nquads") == Format::NQuads);
  CHECK(format_from_name("turtle") == Format::Turtle);
  CHECK(format_from_name("ttl") == Format::Turtle);
  CHECK(format_from_name("n3") == Format::N3);
  CHECK(format_from_name("trig") == Format::TriG);
  CHECK(format_from_name("trix") == Format::TriX);
  CHECK(format_from_name("xml") == Format::Xml);
  CHECK(format_from_name("pretty-xml") == Format::PrettyXml);
  CHECK(format_from_name("TURTLE") == Format::Turtle);
  CHECK_FALSE(format_from_name("json-ld").has_value());
}

TEST_CASE("unimplemented formats raise an error naming the format") {
  Graph g;
  try {
    serialize(g, Format::TriX);
    FAIL("expected UnsupportedFormatError");
  } catch (const UnsupportedFormatError& e) {
    CHECK(std::string(e.what()).find("trix") != std::string::npos);
  }
  CHECK_THROWS_AS(serialize(g, Format::Xml), UnsupportedFormatError);
  CHECK_THROWS_AS(serialize(g, Format::PrettyXml), UnsupportedFormatError);
}

TEST_CASE("reference resolution follows rfc 3986") {
  const std::string base = "http://a/b/c/d;p?q";
  CHECK(resolve_iri_reference(base, "g") == "http://a/b/c/g");
  CHECK(resolve_iri_reference(base, "./g") == "http://a/b/c/g");
  CHECK(resolve_iri_reference(base, "g/") == "http://a/b/c/g/");
  CHECK(resolve_iri_reference(base, "/g") == "http://a/g");
  CHECK(resolve_iri_reference(base, "//g") == "http://g");
  CHECK(resolve_iri_reference(base, "?y") == "http://a/b/c/d;p?y");
  CHECK(resolve_iri_reference(base, "g?y") == "http://a/b/c/g?y");
  CHECK(resolve_iri_reference(base, "#s") == "http://a/b/c/d;p?q#s");
  CHECK(resolve_iri_reference(base, "g#s") == "http://a/b/c/g#s");
  CHECK(resolve_iri_reference(base, "") == "http://a/b/c/d;p?q");
  CHECK(resolve_iri_reference(base, ".") == "http://a/b/c/");
  CHECK(resolve_iri_reference(base, "..") == "http://a/b/");
  CHECK(resolve_iri_reference(base, "../g") == "http://a/b/g");
  CHECK(resolve_iri_reference(base, "../../g") == "http://a/g");
  CHECK(resolve_iri_reference(base, "http://other/x") == "http://other/x");
}

TEST_CASE("trailing semicolons and repeated separators are tolerated") {
  Graph g = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p ex:o ; .");
  CHECK(g.size() == 1);
}
