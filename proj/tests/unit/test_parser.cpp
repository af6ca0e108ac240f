#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ilx/fixtures.hpp"
#include "ilx/parser.hpp"
#include "random_inputs.hpp"

using namespace ilx;
using namespace ilx::testing;

TEST_CASE("parse: class with a slot") {
  auto r = parse("class Alive < State { (hasEntity) -> 1 Person }");
  REQUIRE(r.diagnostics.empty());
  REQUIRE(r.statements.size() == 1);
  const auto& c = std::get<ClassDecl>(r.statements[0].payload);
  CHECK(c.name.text == "Alive");
  REQUIRE(c.parents.size() == 1);
  CHECK(c.parents[0].text == "State");
  REQUIRE(c.slots.size() == 1);
  CHECK(c.slots[0].relation.text == "hasEntity");
  CHECK(c.slots[0].range.text == "Person");
  CHECK(c.slots[0].cardinality == Cardinality::ExactlyOne);
  CHECK_FALSE(c.slots[0].sets_domain_range);
}

TEST_CASE("parse: combined chain and sub-relation") {
  auto r = parse("rel hasEvent/hasTime < hasKillTime < hasTime");
  REQUIRE(r.diagnostics.empty());
  const auto& rel = std::get<RelationDecl>(r.statements.at(0).payload);
  REQUIRE(rel.head.size() == 2);
  CHECK(rel.head[0].text == "hasEvent");
  CHECK(rel.head[1].text == "hasTime");
  REQUIRE(rel.supers.size() == 2);
  CHECK(rel.supers[0].text == "hasKillTime");
  CHECK(rel.supers[1].text == "hasTime");
}

TEST_CASE("parse: chain on the right is E040") {
  auto r = parse("rel hasAgent < hasA/hasB");
  CHECK(codes_of(r.diagnostics) == std::vector<std::string>{"E040"});
  CHECK(r.statements.empty());
}

TEST_CASE("parse: dangling slash is E041") {
  auto r = parse("rel hasA/ < hasB");
  CHECK(codes_of(r.diagnostics) == std::vector<std::string>{"E041"});
}

TEST_CASE("parse: empty input") {
  auto r = parse("");
  CHECK(r.statements.empty());
  CHECK(r.diagnostics.empty());
}

TEST_CASE("parse: underline, optional marker, CRLF and comments") {
  auto r = parse("# header\r\nclass State { !(hasEntity) -> 1 Entity  # trailing\r\n (hasX) -> ? Y }\r\n");
  REQUIRE(r.diagnostics.empty());
  const auto& c = std::get<ClassDecl>(r.statements.at(0).payload);
  REQUIRE(c.slots.size() == 2);
  CHECK(c.slots[0].sets_domain_range);
  CHECK(c.slots[1].cardinality == Cardinality::AtMostOne);
}

TEST_CASE("parse: intersection parents, unions, prefixes, graphs") {
  auto r = parse(
      "@prefix ex: <http://example.org/x#>\n"
      "class A < B & C\n"
      "class U = A | B\n"
      "graph G {\n  x : A\n  x r y\n}\n");
  REQUIRE(r.diagnostics.empty());
  REQUIRE(r.statements.size() == 4);
  CHECK(std::get<PrefixDecl>(r.statements[0].payload).iri == "http://example.org/x#");
  CHECK(std::get<ClassDecl>(r.statements[1].payload).parents.size() == 2);
  CHECK(std::get<ClassDecl>(r.statements[2].payload).union_members.size() == 2);
  const auto& g = std::get<GraphDecl>(r.statements[3].payload);
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.size() == 1);
}

TEST_CASE("parse: malformed forms are E001") {
  for (const char* bad : {"class", "class A <", "rel", "rel a/b", "class U = A", "class A < B = C | D",
                          "class A { (r) -> 2 B }", "class A { r -> 1 B }", "frobnicate", "class A }",
                          "graph G { x }", "@prefix ex <http://x#>"}) {
    CAPTURE(bad);
    auto r = parse(bad);
    CHECK(codes_of(r.diagnostics) == std::vector<std::string>{"E001"});
    CHECK(r.statements.empty());
  }
}

TEST_CASE("parse: spans are 1-based and point at the offending token") {
  auto r = parse("class A\nclass B < \n");
  REQUIRE(r.diagnostics.size() == 1);
  const auto& s = *r.diagnostics[0].span;
  CHECK(s.line == 2);
  CHECK(s.column >= 1);
  CHECK(s.length >= 1);
  CHECK(r.statements.size() == 1);
  CHECK(r.statements[0].span.line == 1);
  CHECK(r.statements[0].span.column == 1);
}

TEST_CASE("parse: unclosed block recovers at end of input") {
  auto r = parse("class A {\n (r) -> 1 B\n");
  CHECK(codes_of(r.diagnostics) == std::vector<std::string>{"E001"});
}

TEST_CASE("property: error recovery keeps exactly the well-formed statements") {
  const std::vector<std::string> good = {"rel r1", "rel r2 < r1", "class A", "class B < A", "class C = A | B",
                                          "rel r3/r2 < r1", "class D { (r1) -> ? A }"};
  const std::vector<std::string> bad = {"class", "rel a/ < b", "rel a < b/c", "class X < ", "%%%",
                                         "class Y = Z", "class Q { (r) -> 7 A }", "graph", "rel a/b"};
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    std::string text;
    std::size_t n_good = 0, n_bad = 0;
    const int lines = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < lines; ++i) {
      if (rng() % 2) {
        text += good[rng() % good.size()];
        ++n_good;
      } else {
        text += bad[rng() % bad.size()];
        ++n_bad;
      }
      text += '\n';
    }
    auto r = parse(text);
    CAPTURE(text);
    CHECK(r.statements.size() == n_good);
    CHECK(r.diagnostics.size() == n_bad);
    for (const auto& d : r.diagnostics) {
      REQUIRE(d.span);
      CHECK(d.span->line >= 1);
      CHECK(d.span->line <= lines + 1);
      CHECK(d.span->column >= 1);
    }
  }
}

TEST_CASE("pretty_print: trivial models") {
  CHECK(pretty_print(model_of("")) == "");
  CHECK(pretty_print(model_of("class Entity")) == "class Entity\n");
}

TEST_CASE("pretty_print: fixture round-trips to an equal model") {
  const LexiconModel m = fixture_lexicon();
  const std::string text = pretty_print(m);
  CAPTURE(text);
  CHECK(model_of(text) == m);
  CHECK(pretty_print(model_of(text)) == text);
}

TEST_CASE("pretty_print: slots in relation order, inherited slots omitted") {
  const auto m = model_of("rel b\nrel a\nclass T\nclass P { (b) -> 1 T\n (a) -> ? T }\nclass Q < P\n");
  CHECK(pretty_print(m) ==
        "rel b\nrel a\n\nclass T\nclass P {\n  (a) -> ? T\n  (b) -> 1 T\n}\nclass Q < P\n");
}

TEST_CASE("property: round-trip over random lexicons") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::string text = random_lexicon_text(rng, {10, 8, 3});
    CAPTURE(text);
    const LexiconModel m = model_of(text);
    CHECK(model_of(pretty_print(m)) == m);
  }
}
