#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "loom/cli.hpp"
#include "loom/isomorphism.hpp"
#include "loom/turtle.hpp"

using namespace loom;

namespace {

std::filesystem::path test_dir() {
  auto dir = std::filesystem::temp_directory_path() / "loom_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  auto path = test_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string setup_mapping() {
  write_file("people.csv", "ID,name\n1,Ada\n2,Alan\n");
  return write_file("people.ttl", R"(
@prefix ex: <https://foo.org/example/> .
@prefix rr: <http://www.w3.org/ns/r2rml#> .
@prefix rml: <http://semweb.mmlab.be/ns/rml#> .
@prefix ql: <http://semweb.mmlab.be/ns/ql#> .
@prefix foaf: <http://xmlns.com/foaf/0.1/> .

ex:Tm rml:logicalSource [ rml:source "people.csv" ; rml:referenceFormulation ql:CSV ] ;
  rr:subjectMap [ rr:template "https://foo.org/d/{ID}" ] ;
  rr:predicateObjectMap [ rr:predicate foaf:name ; rr:objectMap [ rml:reference "name" ] ] .
)");
}

}  // namespace

TEST_CASE("default invocation writes N-Triples to standard output") {
  auto mapping = setup_mapping();
  auto r = run({mapping});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  Graph got = parse_turtle(r.out);
  CHECK(got.size() == 2);
  CHECK(got.contains({Iri("https://foo.org/d/1"), Iri("http://xmlns.com/foaf/0.1/name"),
                      Literal("Ada")}));
  CHECK(r.out.find("<https://foo.org/d/1>") != std::string::npos);
}

TEST_CASE("-o writes the same bytes to a file") {
  auto mapping = setup_mapping();
  auto direct = run({mapping});
  auto out_path = (test_dir() / "out.nt").string();
  auto filed = run({"-o", out_path, mapping});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(read_file(out_path) == direct.out);
}

TEST_CASE("-f turtle serializes as Turtle") {
  auto mapping = setup_mapping();
  auto r = run({"-f", "turtle", mapping});
  CHECK(r.code == 0);
  Graph got = parse_turtle(r.out);
  CHECK(got.size() == 2);
  auto nt = run({"-f", "nt", mapping});
  CHECK(isomorphic(got, parse_turtle(nt.out)));
}

TEST_CASE("-m produces the same graph") {
  auto mapping = setup_mapping();
  auto plain = run({mapping});
  auto parallel = run({"-m", mapping});
  CHECK(parallel.code == 0);
  CHECK(parallel.out == plain.out);
}

TEST_CASE("--var binds document variables") {
  write_file("other.csv", "ID,name\n7,Grace\n");
  auto mapping = write_file("varcli.ttl", R"(
@prefix ex: <https://foo.org/example/> .
@prefix rr: <http://www.w3.org/ns/r2rml#> .
@prefix rml: <http://semweb.mmlab.be/ns/rml#> .
@prefix ql: <http://semweb.mmlab.be/ns/ql#> .

ex:Tm rml:logicalSource [ rml:source "{{ SRC }}" ; rml:referenceFormulation ql:CSV ] ;
  rr:subjectMap [ rr:template "https://foo.org/d/{ID}" ] ;
  rr:predicateObjectMap [ rr:predicate ex:name ; rr:objectMap [ rml:reference "name" ] ] .
)");
  auto r = run({"--var", "SRC=other.csv", mapping});
  CHECK(r.code == 0);
  CHECK(r.out.find("Grace") != std::string::npos);

  auto unbound = run({mapping});
  CHECK(unbound.code == 1);
  CHECK(unbound.err.find("SRC") != std::string::npos);
}

TEST_CASE("argument errors exit with 2") {
  auto mapping = setup_mapping();

  auto missing_input = run({});
  CHECK(missing_input.code == 2);
  CHECK_FALSE(missing_input.err.empty());

  auto bad_var = run({"--var", "NOEQUALS", mapping});
  CHECK(bad_var.code == 2);
  CHECK(bad_var.err.find("NAME=VALUE") != std::string::npos);

  auto bad_format = run({"-f", "jsonld", mapping});
  CHECK(bad_format.code == 2);
  CHECK(bad_format.err.find("jsonld") != std::string::npos);

  auto unknown_flag = run({"--frobnicate", mapping});
  CHECK(unknown_flag.code == 2);
}

TEST_CASE("conversion failures exit with 1 and name the problem") {
  auto missing = run({(test_dir() / "nope.ttl").string()});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("nope.ttl") != std::string::npos);

  auto bad_syntax = write_file("broken.ttl", "@prefix oops");
  auto syntax = run({bad_syntax});
  CHECK(syntax.code == 1);
  CHECK(syntax.err.find("parse error") != std::string::npos);
}

TEST_CASE("recognized but unimplemented formats fail at serialization") {
  auto mapping = setup_mapping();
  for (const std::string name : {"xml", "pretty-xml", "trix"}) {
    auto r = run({"-f", name, mapping});
    CHECK(r.code == 1);
    CHECK(r.err.find(name) != std::string::npos);
    CHECK(r.err.find("not implemented") != std::string::npos);
  }
}

TEST_CASE("help is printed on request") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("graphloom") != std::string::npos);
  CHECK(r.out.find("--var") != std::string::npos);
}
