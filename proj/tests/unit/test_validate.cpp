#include <doctest.h>

#include "helpers.hpp"
#include "ilx/fixtures.hpp"
#include "ilx/validate.hpp"

using namespace ilx;
using namespace ilx::testing;

namespace {

std::vector<Diagnostic> findings_for(const std::string& extra) {
  const std::string text = std::string(fixture_lexicon_text()) + extra;
  auto r = build_model_from_text(text);
  REQUIRE(r.model);
  return validate_lexicon(*r.model);
}

}  // namespace

TEST_CASE("validate_lexicon: fixture has exactly three void warnings") {
  const auto ds = validate_lexicon(fixture_lexicon());
  REQUIRE(ds.size() == 3);
  std::vector<std::string> subjects;
  for (const auto& d : ds) {
    CHECK(d.code == "W060");
    CHECK_FALSE(d.is_error());
    subjects.push_back(d.subject);
  }
  CHECK(subjects == std::vector<std::string>{"ilexicon:Entity", "ilexicon:Event", "ilexicon:Time"});
}

TEST_CASE("validate_lexicon: relaxing and widening") {
  CHECK(error_codes(findings_for("class Alive2 < State { (hasEntity) -> ? Person }\n")) ==
        std::vector<std::string>{"E031"});
  CHECK(error_codes(findings_for("class Alive3 < State { (hasEntity) -> 1 Event }\n")) ==
        std::vector<std::string>{"E030"});
}

TEST_CASE("validate_lexicon: optional to obligatory with a narrower range is legal") {
  const auto ds = findings_for("class Kill2 < Kill { (hasBeneficiary) -> 1 Person }\nclass Kill3 < Kill { (hasKillTime) -> 1 Time }\n");
  CHECK(error_codes(ds).empty());
}

TEST_CASE("validate_lexicon: redundant restatement warns") {
  const auto ds = findings_for("class Alive4 < State { (hasEntity) -> 1 Entity }\n");
  CHECK(error_codes(ds).empty());
  CHECK(count_code(ds, "W062") == 1);
}

TEST_CASE("validate_lexicon: unused relation warns, chain use counts") {
  const auto m = model_of("rel lonely\nrel a\nrel b\nrel c\nrel a/b < c\nclass T { (a) -> 1 T }");
  const auto ds = validate_lexicon(m);
  CHECK(count_code(ds, "W061") == 1);
  CHECK(ds.back().subject == "ilexicon:lonely");
}

TEST_CASE("validate_lexicon: domain clash is E033") {
  const auto ds = findings_for("class Odd { !(hasEntity) -> 1 Time }\n");
  CHECK(error_codes(ds) == std::vector<std::string>{"E033"});
}

TEST_CASE("validate_lexicon: empty lexicon") { CHECK(validate_lexicon(model_of("")).empty()); }

TEST_CASE("validate_lexicon: deterministic and sorted") {
  const std::string extra = "class Z1 < State { (hasEntity) -> ? Person }\nclass Z2 < State { (hasEntity) -> 1 Time }\nclass Void2\n";
  const auto a = findings_for(extra);
  const auto b = findings_for(extra);
  CHECK(a == b);
  auto sorted = a;
  sort_diagnostics(sorted);
  CHECK(sorted == a);
  for (const auto& d : a) CHECK(is_catalogued(d.code));
}
