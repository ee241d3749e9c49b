#include <doctest.h>

#include "loom/rdf.hpp"

using namespace loom;

TEST_CASE("iri validation") {
  CHECK(Iri::valid("http://example.com/a"));
  CHECK(Iri::valid("urn:uuid:1234"));
  CHECK(Iri::valid("https://foo.org/d/caf\xC3\xA9"));  // non-ASCII allowed raw
  CHECK_FALSE(Iri::valid("no-scheme"));
  CHECK_FALSE(Iri::valid("http://example.com/a b"));
  CHECK_FALSE(Iri::valid("http://example.com/<x>"));
  CHECK_FALSE(Iri::valid("http://example.com/{x}"));
  CHECK_FALSE(Iri::valid(""));
  CHECK_FALSE(Iri::valid("3http://x"));
  CHECK_THROWS_AS(Iri("not an iri"), RdfError);
}

TEST_CASE("blank node requires a label") {
  CHECK(BlankNode("b0").label() == "b0");
  CHECK_THROWS_AS(BlankNode(""), RdfError);
}

TEST_CASE("plain literal defaults to xsd:string") {
  Literal l("hello");
  CHECK(l.lexical() == "hello");
  CHECK(l.datatype() == vocab::xsd_string());
  CHECK_FALSE(l.language().has_value());
}

TEST_CASE("language-tagged literal has rdf:langString datatype") {
  Literal l = Literal::tagged("hola", "es");
  CHECK(l.datatype() == vocab::rdf_lang_string());
  CHECK(l.language().value() == "es");
}

TEST_CASE("language tags compare case-insensitively") {
  CHECK(Literal::tagged("x", "EN") == Literal::tagged("x", "en"));
  CHECK(Literal::tagged("x", "en-GB") == Literal::tagged("x", "en-gb"));
  CHECK(Literal::tagged("x", "en") != Literal::tagged("x", "es"));
  CHECK_FALSE(Literal::tagged("x", "EN") < Literal::tagged("x", "en"));
  CHECK_FALSE(Literal::tagged("x", "en") < Literal::tagged("x", "EN"));
}

TEST_CASE("typed literals compare lexically, not by value") {
  Literal a("1", vocab::xsd_integer());
  Literal b("01", vocab::xsd_integer());
  CHECK(a != b);
  CHECK(Literal("x") != Literal("x", vocab::xsd_integer()));
}

TEST_CASE("to_resource rejects literals") {
  Term t = Literal("x");
  CHECK_THROWS_AS(to_resource(t), RdfError);
  Term iri = Iri("http://example.com/a");
  CHECK(std::holds_alternative<Iri>(to_resource(iri)));
}

TEST_CASE("term kind predicates") {
  CHECK(is_iri(Term(Iri("http://x/"))));
  CHECK(is_blank(Term(BlankNode("b"))));
  CHECK(is_literal(Term(Literal("v"))));
  CHECK_FALSE(is_literal(Term(Iri("http://x/"))));
}

TEST_CASE("graph keeps set semantics under duplicate insertion") {
  Graph g;
  Triple t{Iri("http://x/s"), Iri("http://x/p"), Literal("o")};
  g.insert(t);
  g.insert(t);
  g.insert(t);
  CHECK(g.size() == 1);
  CHECK(g.contains(t));
}

TEST_CASE("graph merge unions triple sets") {
  Graph a, b;
  a.insert(Iri("http://x/s"), Iri("http://x/p"), Literal("1"));
  b.insert(Iri("http://x/s"), Iri("http://x/p"), Literal("1"));
  b.insert(Iri("http://x/s"), Iri("http://x/p"), Literal("2"));
  a.merge(b);
  CHECK(a.size() == 2);
}

TEST_CASE("graph pattern queries") {
  Graph g;
  Iri s("http://x/s"), p("http://x/p"), q("http://x/q");
  g.insert(s, p, Literal("1"));
  g.insert(s, p, Literal("2"));
  g.insert(s, q, Iri("http://x/o"));
  g.insert(BlankNode("b"), q, Iri("http://x/o"));

  CHECK(g.objects_of(s, p).size() == 2);
  CHECK_FALSE(g.object_of(s, p).has_value());  // not unique
  REQUIRE(g.object_of(s, q).has_value());
  CHECK(*g.object_of(s, q) == Term(Iri("http://x/o")));
  CHECK(g.subjects_of(q, Iri("http://x/o")).size() == 2);
  CHECK(g.subjects_with(p).size() == 1);
  CHECK(g.has(s, p));
  CHECK_FALSE(g.has(s, Iri("http://x/none")));
}

TEST_CASE("term display forms") {
  CHECK(term_to_string(Iri("http://x/a")) == "<http://x/a>");
  CHECK(term_to_string(BlankNode("b1")) == "_:b1");
  CHECK(term_to_string(Literal("v")) == "\"v\"");
  CHECK(term_to_string(Literal::tagged("v", "en")) == "\"v\"@en");
  CHECK(term_to_string(Literal("5", vocab::xsd_integer())) ==
        "\"5\"^^<http://www.w3.org/2001/XMLSchema#integer>");
}

TEST_CASE("triples order deterministically") {
  Triple a{Iri("http://x/a"), Iri("http://x/p"), Literal("1")};
  Triple b{Iri("http://x/b"), Iri("http://x/p"), Literal("1")};
  Triple c{Iri("http://x/a"), Iri("http://x/p"), Literal("2")};
  CHECK(a < b);
  CHECK(a < c);
  CHECK_FALSE(a < a);
  CHECK(a == a);
}
