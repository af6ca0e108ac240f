#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "ilx/fixtures.hpp"
#include "ilx/reasoner.hpp"
#include "ilx/turtle.hpp"
#include "random_inputs.hpp"
#include "turtle_check.hpp"

using namespace ilx;
using namespace ilx::testing;

namespace {

// Closed-form triple count of a lexicon export.
std::size_t expected_triples(const LexiconModel& m) {
  std::size_t n = 0;
  for (const auto& c : m.classes()) {
    n += 2 + c.parents.size() + 5 * c.declared_slots.size();
    if (!c.union_members.empty()) n += 1 + 2 * c.union_members.size();
  }
  for (const auto& r : m.relations()) n += 2 + r.super_relations.size() + (r.domain ? 1 : 0) + (r.range ? 1 : 0);
  for (const auto& ch : m.chains()) n += 1 + 2 * ch.chain.size();
  return n;
}

std::size_t triples_of(const std::string& ttl) {
  const auto r = read_turtle(ttl);
  if (r.error) FAIL(*r.error << "\n" << ttl);
  return r.triples.size();
}

}  // namespace

TEST_CASE("turtle checker sanity") {
  CHECK(read_turtle("@prefix e: <http://e/#> .\ne:a e:b e:c , e:d ; e:f [ e:g ( e:h e:i ) ] .").triples.size() == 8);
  CHECK(read_turtle("e:a e:b e:c .").error);
  CHECK(read_turtle("@prefix e: <http://e/#> .\ne:a e:b e:c").error);
  CHECK(read_turtle("@prefix e: <http://e/#> .\ne:a e:b \"x .").error);
  CHECK(read_turtle("").triples.empty());
}

TEST_CASE("lexicon export: Person line") {
  const std::string ttl = export_lexicon_turtle(fixture_lexicon());
  CHECK(ttl.find("ilexicon:Person a owl:Class , ileximon:ILexicalUnit ;\n    rdfs:subClassOf ilexicon:Entity .\n") !=
        std::string::npos);
}

TEST_CASE("lexicon export: State's slot shape") {
  const auto r = read_turtle(export_lexicon_turtle(fixture_lexicon()));
  REQUIRE_FALSE(r.error);
  const std::string il = "<http://ns.inria.fr/ulk/2011/06/10/ilexicon-ex#";
  const std::string im = "<http://ns.inria.fr/ulk/2011/06/10/ileximon-core#";
  std::string bnode;
  for (const auto& [s, p, o] : r.triples)
    if (s == il + "State>" && p == "<http://www.w3.org/2000/01/rdf-schema#subClassOf>" && o.starts_with("_:")) bnode = o;
  REQUIRE_FALSE(bnode.empty());
  std::set<std::pair<std::string, std::string>> props;
  for (const auto& [s, p, o] : r.triples)
    if (s == bnode) props.insert({p, o});
  CHECK(props == std::set<std::pair<std::string, std::string>>{
                     {"<http://www.w3.org/1999/02/22-rdf-syntax-ns#type>", im + "ILexicalPrimitive>"},
                     {im + "onISemanticRelation>", il + "hasEntity>"},
                     {im + "allValuesFrom>", il + "Entity>"},
                     {im + "isObligatory>", "\"true\"^^<http://www.w3.org/2001/XMLSchema#boolean>"},
                 });
}

TEST_CASE("lexicon export: empty model is prefixes only") {
  const std::string ttl = export_lexicon_turtle(model_of(""));
  CHECK(triples_of(ttl) == 0);
  CHECK(ttl.find("@prefix ilexicon:") != std::string::npos);
}

TEST_CASE("lexicon export: triple count matches the closed form") {
  const auto m = fixture_lexicon();
  CHECK(triples_of(export_lexicon_turtle(m)) == expected_triples(m));
  const auto u = model_of("rel r\nrel s\nrel r/s < s\nclass A\nclass B\nclass U = A | B\nclass C < A & B { !(r) -> ? A }");
  CHECK(triples_of(export_lexicon_turtle(u)) == expected_triples(u));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const auto r = model_of(random_lexicon_text(rng, {10, 8, 3}));
    CHECK(triples_of(export_lexicon_turtle(r)) == expected_triples(r));
  }
}

TEST_CASE("lexicon export: namespace override rebases every lexicon IRI") {
  const auto m = fixture_lexicon();
  const std::string ttl = export_lexicon_turtle(m, Namespaces::for_model(m, "http://example.org/x#"));
  CHECK(ttl.find("@prefix ilexicon: <http://example.org/x#> .") != std::string::npos);
  CHECK(ttl.find("ilexicon-ex#") == std::string::npos);
  CHECK(triples_of(ttl) == expected_triples(m));
}

TEST_CASE("lexicon export: deterministic") {
  CHECK(export_lexicon_turtle(fixture_lexicon()) == export_lexicon_turtle(fixture_lexicon()));
}

TEST_CASE("graph export: John kills Mary is three triples") {
  const auto g = fixture_graphs().at(0);
  const std::string ttl = export_graph_turtle(g, false);
  CHECK(triples_of(ttl) == 3);
  CHECK(ttl.find("sems:k01 a ilexicon:Kill ;") != std::string::npos);
}

TEST_CASE("graph export: empty graph is prefixes only") { CHECK(triples_of(export_graph_turtle(SemGraph{}, true)) == 0); }

TEST_CASE("graph export: saturated Suicide has one merged node") {
  const auto m = fixture_lexicon();
  const auto sat = saturate(m, fixture_graphs().at(1)).graph;
  const std::string all = export_graph_turtle(sat, true);
  const auto note = all.find("# sems:b merged into sems:a\n");
  REQUIRE(note != std::string::npos);
  CHECK(all.find("sems:b", all.find('\n', note)) == std::string::npos);
  CHECK(all.find("ilexicon:hasVictimRef sems:a") != std::string::npos);
  CHECK(triples_of(all) > triples_of(export_graph_turtle(sat, false)));
  const std::string asserted = export_graph_turtle(sat, false);
  CHECK(asserted.find("hasVictimRef") == std::string::npos);
  CHECK(triples_of(asserted) == 3);
}

TEST_CASE("graph export: awkward local names stay valid") {
  SemGraph g;
  g.assert_type("end.", L("Entity"));
  g.assert_edge("a-b", L("hasAgent"), "end.");
  CHECK(triples_of(export_graph_turtle(g, true)) == 2);
}

TEST_CASE("meta ontology") {
  const std::string ttl = meta_ontology_turtle();
  for (const char* term : {"ILexicalUnit", "ISemRelation", "ILexicalPrimitive", "onISemanticRelation",
                           "allValuesFrom", "isObligatory"})
    CHECK(ttl.find(std::string("ileximon:") + term) != std::string::npos);
  CHECK(triples_of(ttl) > 0);
}

TEST_CASE("prefix hygiene over random graphs") {
  std::mt19937_64 rng(43);
  const auto m = fixture_lexicon();
  for (int i = 0; i < 30; ++i) {
    const auto sat = saturate(m, random_graph(m, rng, {8, 10, 5})).graph;
    CHECK_FALSE(read_turtle(export_graph_turtle(sat, true)).error);
  }
}
