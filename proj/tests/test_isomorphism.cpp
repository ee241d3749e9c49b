#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "loom/isomorphism.hpp"
#include "loom/rdf.hpp"
#include "loom/turtle.hpp"

using namespace loom;

namespace {

// Exhaustive bijection search, independent of the production algorithm.
// Only usable for small label counts; the reference the fast path is
// checked against.
bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  auto labels_of = [](const Graph& g) {
    std::set<std::string> ls;
    for (const auto& t : g) {
      if (const auto* bn = std::get_if<BlankNode>(&t.subject)) ls.insert(bn->label());
      if (const auto* bn = std::get_if<BlankNode>(&t.object)) ls.insert(bn->label());
    }
    return std::vector<std::string>(ls.begin(), ls.end());
  };
  std::vector<std::string> la = labels_of(a);
  std::vector<std::string> lb = labels_of(b);
  if (la.size() != lb.size()) return false;

  std::sort(lb.begin(), lb.end());
  do {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < la.size(); ++i) m[la[i]] = lb[i];
    Graph renamed;
    for (const auto& t : a) {
      Resource s = t.subject;
      if (const auto* bn = std::get_if<BlankNode>(&s)) s = BlankNode(m[bn->label()]);
      Term o = t.object;
      if (const auto* bn = std::get_if<BlankNode>(&o)) o = BlankNode(m[bn->label()]);
      renamed.insert(std::move(s), t.predicate, std::move(o));
    }
    if (renamed == b) return true;
  } while (std::next_permutation(lb.begin(), lb.end()));
  return false;
}

Graph random_graph(std::mt19937& rng, int n_blank, int n_triples) {
  std::vector<Term> pool;
  for (int i = 0; i < n_blank; ++i) pool.push_back(BlankNode("b" + std::to_string(i)));
  pool.push_back(Iri("http://x/r1"));
  pool.push_back(Iri("http://x/r2"));
  pool.push_back(Literal("v1"));
  pool.push_back(Literal("v2"));
  std::vector<Iri> preds = {Iri("http://x/p"), Iri("http://x/q")};

  Graph g;
  std::uniform_int_distribution<std::size_t> pick_term(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_pred(0, preds.size() - 1);
  for (int i = 0; i < n_triples; ++i) {
    Term s = pool[pick_term(rng)];
    while (is_literal(s)) s = pool[pick_term(rng)];
    g.insert(to_resource(s), preds[pick_pred(rng)], pool[pick_term(rng)]);
  }
  return g;
}

Graph permute_blanks(const Graph& g, std::mt19937& rng) {
  std::set<std::string> labels;
  for (const auto& t : g) {
    if (const auto* bn = std::get_if<BlankNode>(&t.subject)) labels.insert(bn->label());
    if (const auto* bn = std::get_if<BlankNode>(&t.object)) labels.insert(bn->label());
  }
  std::vector<std::string> from(labels.begin(), labels.end());
  std::vector<std::string> to = from;
  std::shuffle(to.begin(), to.end(), rng);
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = "x" + to[i];

  Graph out;
  for (const auto& t : g) {
    Resource s = t.subject;
    if (const auto* bn = std::get_if<BlankNode>(&s)) s = BlankNode(m[bn->label()]);
    Term o = t.object;
    if (const auto* bn = std::get_if<BlankNode>(&o)) o = BlankNode(m[bn->label()]);
    out.insert(std::move(s), t.predicate, std::move(o));
  }
  return out;
}

}  // namespace

TEST_CASE("a graph is isomorphic to itself") {
  Graph g = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p [ ex:q ex:o ] .");
  CHECK(isomorphic(g, g));
}

TEST_CASE("blank label renaming preserves isomorphism") {
  Graph a, b;
  a.insert(BlankNode("a"), Iri("http://x/p"), Iri("http://x/o"));
  b.insert(BlankNode("b"), Iri("http://x/p"), Iri("http://x/o"));
  CHECK(isomorphic(a, b));
  CHECK(isomorphic(b, a));
}

TEST_CASE("ground graphs compare as sets") {
  Graph a = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p ex:o ; ex:q \"v\" .");
  Graph b = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:q \"v\" .\nex:s ex:p ex:o .");
  Graph c = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p ex:o ; ex:q \"w\" .");
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, c));
}

TEST_CASE("size mismatch is never isomorphic") {
  Graph a = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p ex:o .");
  Graph b;
  CHECK_FALSE(isomorphic(a, b));
  CHECK(isomorphic(b, Graph{}));
}

TEST_CASE("literal language comparison inside isomorphism is case-insensitive") {
  Graph a, b;
  a.insert(BlankNode("x"), Iri("http://x/p"), Literal::tagged("v", "EN"));
  b.insert(BlankNode("y"), Iri("http://x/p"), Literal::tagged("v", "en"));
  CHECK(isomorphic(a, b));
}

TEST_CASE("structure must match, not just labels") {
  // Two blanks in a chain vs two blanks sharing an object.
  Graph chain, fork;
  Iri p("http://x/p");
  chain.insert(BlankNode("a"), p, BlankNode("b"));
  chain.insert(BlankNode("b"), p, Iri("http://x/end"));
  fork.insert(BlankNode("a"), p, Iri("http://x/end"));
  fork.insert(BlankNode("b"), p, Iri("http://x/end"));
  CHECK_FALSE(isomorphic(chain, fork));
}

TEST_CASE("swapped attribute values are not isomorphic") {
  Graph a, b;
  Iri name("http://x/name"), age("http://x/age");
  a.insert(BlankNode("p1"), name, Literal("ada"));
  a.insert(BlankNode("p1"), age, Literal("36"));
  a.insert(BlankNode("p2"), name, Literal("bob"));
  a.insert(BlankNode("p2"), age, Literal("41"));
  b.insert(BlankNode("q1"), name, Literal("ada"));
  b.insert(BlankNode("q1"), age, Literal("41"));  // crossed
  b.insert(BlankNode("q2"), name, Literal("bob"));
  b.insert(BlankNode("q2"), age, Literal("36"));
  CHECK_FALSE(isomorphic(a, b));
}

TEST_CASE("symmetric blank cycles need backtracking") {
  // Both nodes look identical under local refinement; a valid pairing exists.
  Graph a, b;
  Iri p("http://x/p");
  a.insert(BlankNode("m"), p, BlankNode("n"));
  a.insert(BlankNode("n"), p, BlankNode("m"));
  b.insert(BlankNode("u"), p, BlankNode("v"));
  b.insert(BlankNode("v"), p, BlankNode("u"));
  CHECK(isomorphic(a, b));
}

TEST_CASE("matches exhaustive search on randomized graphs") {
  std::mt19937 rng(20260819);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 250; ++trial) {
    Graph a = random_graph(rng, 1 + trial % 6, 3 + trial % 7);
    Graph b = permute_blanks(a, rng);
    if (trial % 3 == 0) {
      // Perturb: drop one triple and add a fresh ground one.
      Graph mutated;
      std::size_t skip = trial % std::max<std::size_t>(b.size(), 1);
      std::size_t i = 0;
      for (const auto& t : b) {
        if (i++ != skip) mutated.insert(t);
      }
      mutated.insert(Iri("http://x/extra"), Iri("http://x/p"),
                     Literal("t" + std::to_string(trial)));
      b = mutated;
    }
    bool expected = brute_force_isomorphic(a, b);
    bool got = isomorphic(a, b);
    if (expected) ++positives; else ++negatives;
    REQUIRE_MESSAGE(got == expected, "trial ", trial);
  }
  // Both outcomes must actually be exercised for the oracle to mean anything.
  CHECK(positives > 50);
  CHECK(negatives > 50);
}

TEST_CASE("difference description names the offending triples") {
  Graph a = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p \"got\" .");
  Graph b = parse_turtle("@prefix ex: <http://x/> .\nex:s ex:p \"want\" .");
  std::string diff = describe_difference(a, b);
  CHECK(diff.find("got") != std::string::npos);
  CHECK(diff.find("want") != std::string::npos);
  CHECK(describe_difference(a, a).empty());
}
