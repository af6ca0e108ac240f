#ifndef ILX_REASONER_HPP
#define ILX_REASONER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ilx/graph.hpp"
#include "ilx/model.hpp"

namespace ilx {

// The fixed rule set.
//   R1  x:C, C < D                               => x:D
//   R2  (x p y), p < q                           => (x q y)
//   R3  p1/../pn < q, (x p1 y1) .. (yn-1 pn z)   => (x q z)
//   R4  (x p y), domain(p) = C / range(p) = D    => x:C / y:D
//   R5  x:C, C has a slot on p, (x p y), (x p z) => y = z
//   R7  x:C, C has a slot (p) -> R, (x p y)      => y:R
//   Rm  a fact about a merged node, a = b        => the same fact about b
enum class Rule { R1, R2, R3, R4, R5, R7, Rm };

std::string_view to_string(Rule r);

struct Fact {
  enum class Kind { Type, Edge, Same };

  Kind kind = Kind::Edge;
  std::string subject;
  Qid predicate;       // class for Type, relation for Edge, unused for Same
  std::string object;  // unused for Type

  static Fact type(std::string node, Qid cls) { return {Kind::Type, std::move(node), std::move(cls), {}}; }
  static Fact edge(std::string s, Qid p, std::string o) { return {Kind::Edge, std::move(s), std::move(p), std::move(o)}; }
  static Fact same(std::string a, std::string b) { return {Kind::Same, std::move(a), {}, std::move(b)}; }

  friend auto operator<=>(const Fact&, const Fact&) = default;
  friend bool operator==(const Fact&, const Fact&) = default;
};

struct Axiom {
  enum class Kind { SubClass, SubRelation, Chain, Domain, Range, Slot };

  Kind kind = Kind::SubClass;
  // SubClass: sub, super. SubRelation: sub, super. Domain/Range: relation,
  // class. Slot: class, range (relation in `relations`). Chain: -, super.
  Qid first;
  Qid second;
  std::vector<Qid> relations;
  std::optional<Cardinality> cardinality;  // Slot only

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

using Premise = std::variant<Fact, Axiom>;

struct Derivation {
  Rule rule = Rule::R1;
  Fact conclusion;
  std::vector<Premise> premises;
};

struct SaturateOptions {
  // When set, the work queue and per-fact rule order are permuted with this
  // seed. The saturated canonical graph does not depend on it.
  std::optional<std::uint64_t> order_seed;
  // R7. Disabled for strict validation, where fillers must be typed by
  // assertion, subsumption, or domain/range.
  bool slot_range_typing = true;
};

struct Saturation {
  SemGraph graph;
  std::vector<Derivation> derivations;
};

// Computes the fixpoint of the rule set. Throws ContractError (E100/E101) if
// the graph names undeclared classes or relations.
Saturation saturate(const LexiconModel& model, const SemGraph& graph, const SaturateOptions& options = {});

// Renders the proof tree of `fact`, which must hold in the saturated graph.
// Node names may be given in non-canonical form. Throws std::out_of_range
// when the fact does not hold.
std::string explain(const SemGraph& saturated, std::span<const Derivation> derivations, const Fact& fact);

// Parses `s p o`, `x : C`, `x:C`, or `a = b` against the model's vocabulary.
std::optional<Fact> parse_fact(const LexiconModel& model, std::string_view text);

std::string render(const Fact& fact);
std::string render(const Axiom& axiom);

}  // namespace ilx

#endif  // ILX_REASONER_HPP
