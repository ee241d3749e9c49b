#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "loom/sources.hpp"
#include "loom/xml.hpp"

using namespace loom;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("csv: header plus one data row") {
  Frame f = load_csv_text("A,B\n1,2\n");
  CHECK(f.columns() == std::vector<std::string>{"A", "B"});
  REQUIRE(f.row_count() == 1);
  CHECK(f.cell(0, "A") == Cell{"1"});
  CHECK(f.cell(0, "B") == Cell{"2"});
}

TEST_CASE("csv: quoted fields keep commas, newlines, and doubled quotes") {
  Frame f = load_csv_text("Name,Quote\nAda,\"Hello, \"\"World\"\"\nBye\"\n");
  REQUIRE(f.row_count() == 1);
  CHECK(f.cell(0, "Quote") == Cell{"Hello, \"World\"\nBye"});
}

TEST_CASE("csv: empty field is empty string, missing trailing field is null") {
  Frame f = load_csv_text("A,B\nx,\ny\n");
  REQUIRE(f.row_count() == 2);
  CHECK(f.cell(0, "B") == Cell{""});
  CHECK(f.cell(1, "A") == Cell{"y"});
  CHECK(f.cell(1, "B") == std::nullopt);
}

TEST_CASE("csv: record wider than the header is rejected") {
  CHECK_THROWS_AS(load_csv_text("A,B\n1,2,3\n"), SourceError);
}

TEST_CASE("csv: header-only file has zero rows") {
  Frame f = load_csv_text("A,B\n");
  CHECK(f.row_count() == 0);
  CHECK(f.columns().size() == 2);
}

TEST_CASE("csv: frames are strict about unknown columns") {
  Frame f = load_csv_text("A\nx\n");
  CHECK_THROWS_AS(f.cell(0, "Nope"), SourceError);
}

TEST_CASE("csv: CRLF line endings") {
  Frame f = load_csv_text("A,B\r\n1,2\r\n3,4\r\n");
  REQUIRE(f.row_count() == 2);
  CHECK(f.cell(1, "B") == Cell{"4"});
}

TEST_CASE("csv: no trailing newline still ends the last record") {
  Frame f = load_csv_text("A,B\n1,2");
  REQUIRE(f.row_count() == 1);
  CHECK(f.cell(0, "B") == Cell{"2"});
}

TEST_CASE("csv: duplicate header names are rejected") {
  CHECK_THROWS_AS(load_csv_text("A,A\n1,2\n"), SourceError);
}

TEST_CASE("csv: empty input has no header") {
  CHECK_THROWS_AS(load_csv_text(""), SourceError);
}

TEST_CASE("csv: unbalanced quote is malformed") {
  CHECK_THROWS_AS(load_csv_text("A\n\"oops\n"), SourceError);
}

TEST_CASE("csv: quote inside an unquoted field is literal") {
  Frame f = load_csv_text("A\nsay \"hi\"\n");
  CHECK(f.cell(0, "A") == Cell{"say \"hi\""});
}

TEST_CASE("json: array iterator yields one row per element") {
  Frame f = load_json_text(R"({"students":[{"ID":10,"Name":"Venus"}]})", "$.students[*]");
  REQUIRE(f.row_count() == 1);
  CHECK(f.cell(0, "ID") == Cell{"10"});
  CHECK(f.cell(0, "Name") == Cell{"Venus"});
}

TEST_CASE("json: nested objects flatten to dotted paths") {
  Frame f = load_json_text(R"({"people":[{"name":{"first":"Ada","last":"Lovelace"},"age":36}]})",
                           "$.people[*]");
  REQUIRE(f.row_count() == 1);
  CHECK(f.cell(0, "name.first") == Cell{"Ada"});
  CHECK(f.cell(0, "name.last") == Cell{"Lovelace"});
  CHECK(f.cell(0, "age") == Cell{"36"});
  CHECK_THROWS_AS(f.cell(0, "name"), SourceError);  // non-scalar
}

TEST_CASE("json: null values and absent keys are null cells") {
  Frame f = load_json_text(R"([{"a":null,"b":1},{"b":2}])", "$[*]");
  REQUIRE(f.row_count() == 2);
  CHECK(f.cell(0, "a") == std::nullopt);
  CHECK(f.cell(0, "b") == Cell{"1"});
  CHECK(f.cell(1, "a") == std::nullopt);
  CHECK(f.cell(1, "missing") == std::nullopt);  // non-strict: unknown is null
}

TEST_CASE("json: array-valued members cannot be referenced") {
  Frame f = load_json_text(R"([{"tags":[1,2],"n":"x"}])", "$[*]");
  CHECK_THROWS_AS(f.cell(0, "tags"), SourceError);
  CHECK(f.cell(0, "n") == Cell{"x"});
}

TEST_CASE("json: scalar stringification") {
  Frame f = load_json_text(
      R"([{"i":-3,"f":2.5,"g":3.0,"t":true,"u":false,"s":"07"}])", "$[*]");
  CHECK(f.cell(0, "i") == Cell{"-3"});
  CHECK(f.cell(0, "f") == Cell{"2.5"});
  CHECK(f.cell(0, "g") == Cell{"3"});
  CHECK(f.cell(0, "t") == Cell{"true"});
  CHECK(f.cell(0, "u") == Cell{"false"});
  CHECK(f.cell(0, "s") == Cell{"07"});
}

TEST_CASE("json: index, root, and recursive-descent selectors") {
  const std::string doc = R"({"students":[{"Name":"A"},{"Name":"B"}],"teacher":{"Name":"T"}})";
  CHECK(load_json_text(doc, "$.students[0]").row_count() == 1);
  CHECK(load_json_text(doc, "$.students[1]").cell(0, "Name") == Cell{"B"});
  CHECK(load_json_text(doc, "$").row_count() == 1);
  Frame all = load_json_text(doc, "$..Name");
  CHECK(all.row_count() == 3);  // scalar rows: no columns, but one row each
}

TEST_CASE("json: bracketed member names") {
  Frame f = load_json_text(R"({"odd name":[{"v":1}]})", "$['odd name'][*]");
  CHECK(f.row_count() == 1);
}

TEST_CASE("json: malformed document and malformed path") {
  CHECK_THROWS_AS(load_json_text("{nope", "$"), SourceError);
  CHECK_THROWS_AS(load_json_text("{}", "students"), SourceError);
  CHECK_THROWS_AS(load_json_text("{}", "$.a[?(@.x)]"), SourceError);
}

TEST_CASE("xml: iterator selects element rows with leaf-child columns") {
  const std::string doc =
      "<students><student><ID>10</ID><Name>Venus</Name></student>"
      "<student><ID>11</ID></student></students>";
  Frame f = load_xml_text(doc, "/students/student");
  REQUIRE(f.row_count() == 2);
  CHECK(f.cell(0, "ID") == Cell{"10"});
  CHECK(f.cell(0, "Name") == Cell{"Venus"});
  CHECK(f.cell(1, "ID") == Cell{"11"});
  CHECK(f.cell(1, "Name") == std::nullopt);
}

TEST_CASE("xml: attributes are addressable with an @ prefix") {
  Frame f = load_xml_text("<r><e id=\"5\" lang=\"en\"><Name>A</Name></e></r>", "/r/e");
  CHECK(f.cell(0, "@id") == Cell{"5"});
  CHECK(f.cell(0, "@lang") == Cell{"en"});
  CHECK(f.cell(0, "Name") == Cell{"A"});
}

TEST_CASE("xml: nested elements flatten to slash paths") {
  Frame f = load_xml_text("<r><p><name><first>Ada</first></name></p></r>", "/r/p");
  CHECK(f.cell(0, "name/first") == Cell{"Ada"});
  CHECK_THROWS_AS(f.cell(0, "name"), SourceError);
}

TEST_CASE("xml: the row element's own text is '.'") {
  Frame f = load_xml_text("<tags><tag>x</tag><tag>y</tag></tags>", "/tags/tag");
  REQUIRE(f.row_count() == 2);
  CHECK(f.cell(0, ".") == Cell{"x"});
  CHECK(f.cell(1, ".") == Cell{"y"});
}

TEST_CASE("xml: entities and CDATA decode into text") {
  Frame f = load_xml_text(
      "<r><e><v>a &amp; b &lt;c&gt; &#65; &#x41;</v><w><![CDATA[<raw>]]></w></e></r>", "/r/e");
  CHECK(f.cell(0, "v") == Cell{"a & b <c> A A"});
  CHECK(f.cell(0, "w") == Cell{"<raw>"});
}

TEST_CASE("xml: descendant and positional selection") {
  const std::string doc =
      "<school><class><student><n>A</n></student></class>"
      "<class><student><n>B</n></student><student><n>C</n></student></class></school>";
  CHECK(load_xml_text(doc, "//student").row_count() == 3);
  Frame second = load_xml_text(doc, "/school/class[2]/student");
  REQUIRE(second.row_count() == 2);
  CHECK(second.cell(0, "n") == Cell{"B"});
  Frame per_class = load_xml_text(doc, "/school/class/student[1]");
  REQUIRE(per_class.row_count() == 2);  // first student of each class
  CHECK(per_class.cell(1, "n") == Cell{"B"});
}

TEST_CASE("xml: malformed documents are rejected") {
  CHECK_THROWS_AS(parse_xml("<a><b></a>"), XmlError);
  CHECK_THROWS_AS(parse_xml("<!DOCTYPE html><a/>"), XmlError);
  CHECK_THROWS_AS(parse_xml("<a x=\"1\" x=\"2\"/>"), XmlError);
  CHECK_THROWS_AS(parse_xml("<a>&bogus;</a>"), XmlError);
  CHECK_THROWS_AS(parse_xml(""), XmlError);
}

TEST_CASE("xml: error message carries the line number") {
  try {
    parse_xml("<a>\n<b>\n</c>\n</a>");
    FAIL("expected XmlError");
  } catch (const XmlError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("resolver: one load per distinct descriptor") {
  auto csv = write_temp("loom_cache_test.csv", "A\n1\n2\n");
  FrameResolver resolver;
  LogicalSourceDescriptor d;
  d.id = "ls";
  d.kind = SourceKind::File;
  d.location = csv.string();
  d.formulation = ReferenceFormulation::Csv;

  auto first = resolver.resolve(d);
  auto second = resolver.resolve(d);
  CHECK(resolver.load_count() == 1);
  CHECK(first.get() == second.get());
  CHECK(first->row_count() == 2);
}

TEST_CASE("resolver: iterator is part of the cache identity") {
  auto path = write_temp("loom_cache_test.json", R"({"a":[{"x":1}],"b":[{"x":2}]})");
  FrameResolver resolver;
  LogicalSourceDescriptor d;
  d.kind = SourceKind::File;
  d.location = path.string();
  d.formulation = ReferenceFormulation::JsonPath;
  d.iterator = "$.a[*]";
  auto a = resolver.resolve(d);
  d.iterator = "$.b[*]";
  auto b = resolver.resolve(d);
  CHECK(resolver.load_count() == 2);
  CHECK(a->cell(0, "x") == Cell{"1"});
  CHECK(b->cell(0, "x") == Cell{"2"});
}

TEST_CASE("resolver: database and service sources need a registered adapter") {
  FrameResolver resolver;
  LogicalSourceDescriptor d;
  d.id = "ls1";
  d.kind = SourceKind::Sql;
  try {
    resolver.resolve(d);
    FAIL("expected SourceError");
  } catch (const SourceError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("no SQL adapter is installed") != std::string::npos);
    CHECK(msg.find("register_adapter") != std::string::npos);
  }
  d.kind = SourceKind::SparqlService;
  CHECK_THROWS_AS(resolver.resolve(d), SourceError);
}

TEST_CASE("resolver: a registered adapter serves non-file sources") {
  FrameResolver resolver;
  resolver.register_adapter(SourceKind::Sql, [](const LogicalSourceDescriptor& d) {
    Frame f({"table"}, true);
    f.add_row({Cell{d.sql_table.value_or("?")}});
    return f;
  });
  LogicalSourceDescriptor d;
  d.kind = SourceKind::Sql;
  d.sql_table = "student";
  auto frame = resolver.resolve(d);
  REQUIRE(frame->row_count() == 1);
  CHECK(frame->cell(0, "table") == Cell{"student"});
}

TEST_CASE("resolver: missing file is a source error") {
  FrameResolver resolver;
  LogicalSourceDescriptor d;
  d.kind = SourceKind::File;
  d.location = "/nonexistent/loom/file.csv";
  d.formulation = ReferenceFormulation::Csv;
  CHECK_THROWS_AS(resolver.resolve(d), SourceError);
}
