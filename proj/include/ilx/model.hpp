#ifndef ILX_MODEL_HPP
#define ILX_MODEL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ilx/ast.hpp"
#include "ilx/diagnostic.hpp"
#include "ilx/qid.hpp"

namespace ilx {

struct SlotOrigin {
  enum class Kind { DeclaredHere, InheritedFrom, RestrictedFrom };

  Kind kind = Kind::DeclaredHere;
  std::optional<Qid> from;  // set for InheritedFrom and RestrictedFrom

  static SlotOrigin declared_here() { return {}; }
  static SlotOrigin inherited_from(Qid c) { return {Kind::InheritedFrom, std::move(c)}; }
  static SlotOrigin restricted_from(Qid c) { return {Kind::RestrictedFrom, std::move(c)}; }

  friend bool operator==(const SlotOrigin&, const SlotOrigin&) = default;
};

// A conceptual participant slot: the class restricts `relation` to fillers of
// `range`, at most once. ExactlyOne slots are obligatory, AtMostOne optional.
struct ConPSlot {
  static constexpr int kMaxCardinality = 1;

  Qid relation;
  Qid range;
  Cardinality cardinality = Cardinality::ExactlyOne;
  bool sets_domain_range = false;
  SlotOrigin origin;
  std::optional<SourceSpan> span;

  bool obligatory() const { return cardinality == Cardinality::ExactlyOne; }

  // Source locations do not take part in equality.
  friend bool operator==(const ConPSlot& a, const ConPSlot& b) {
    return a.relation == b.relation && a.range == b.range && a.cardinality == b.cardinality &&
           a.sets_domain_range == b.sets_domain_range && a.origin == b.origin;
  }
};

struct ClassDef {
  Qid name;
  std::vector<Qid> parents;        // intersection when more than one
  std::vector<Qid> union_members;  // empty, or at least two
  std::vector<ConPSlot> declared_slots;
  SourceSpan span;

  friend bool operator==(const ClassDef& a, const ClassDef& b) {
    return a.name == b.name && a.parents == b.parents && a.union_members == b.union_members &&
           a.declared_slots == b.declared_slots;
  }
};

struct RelationDef {
  Qid name;
  std::vector<Qid> super_relations;
  std::optional<Qid> domain;
  std::optional<Qid> range;
  SourceSpan span;

  friend bool operator==(const RelationDef& a, const RelationDef& b) {
    return a.name == b.name && a.super_relations == b.super_relations && a.domain == b.domain &&
           a.range == b.range;
  }
};

struct ChainAxiom {
  std::vector<Qid> chain;  // length >= 2
  Qid super_relation;
  SourceSpan span;

  friend bool operator==(const ChainAxiom& a, const ChainAxiom& b) {
    return a.chain == b.chain && a.super_relation == b.super_relation;
  }
};

using SlotTable = std::map<Qid, ConPSlot>;

enum class ClassKind { Primitive, SemanticallyVoid, Derived };

std::string_view to_string(ClassKind k);
std::string_view to_string(Cardinality c);

struct BuildResult;

// Immutable after construction; every query is const and thread-safe.
class LexiconModel {
 public:
  LexiconModel() = default;

  // Explicit `@prefix` declarations, label -> IRI.
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }
  // Declaration order.
  std::span<const ClassDef> classes() const { return classes_; }
  std::span<const RelationDef> relations() const { return relations_; }
  std::span<const ChainAxiom> chains() const { return chains_; }

  const ClassDef* find_class(const Qid& name) const;
  const RelationDef* find_relation(const Qid& name) const;
  std::optional<std::size_t> class_index(const Qid& name) const;
  std::optional<std::size_t> relation_index(const Qid& name) const;

  // Reflexive-transitive closures over dense indices.
  bool class_leq(std::size_t sub, std::size_t super) const;
  bool relation_leq(std::size_t sub, std::size_t super) const;
  const std::vector<std::size_t>& class_ancestors(std::size_t c) const { return class_ancestors_[c]; }
  const std::vector<std::size_t>& relation_ancestors(std::size_t r) const {
    return relation_ancestors_[r];
  }

  const SlotTable& slot_table(std::size_t c) const { return slot_tables_[c]; }
  bool slot_conflict(std::size_t c) const { return slot_conflicts_[c]; }

  // E030/E031/E032/E033/W062 findings produced while resolving slots.
  std::span<const Diagnostic> resolution_findings() const { return resolution_findings_; }

  // IRI bound to `label`: explicit declaration, else the built-in default.
  std::optional<std::string> namespace_iri(std::string_view label) const;

  friend bool operator==(const LexiconModel& a, const LexiconModel& b) {
    return a.prefixes_ == b.prefixes_ && a.classes_ == b.classes_ &&
           a.relations_ == b.relations_ && a.chains_ == b.chains_;
  }

 private:
  friend BuildResult build_model(std::span<const Statement> declarations);
  friend class ModelBuilder;

  std::map<std::string, std::string> prefixes_;
  std::vector<ClassDef> classes_;
  std::vector<RelationDef> relations_;
  std::vector<ChainAxiom> chains_;
  std::unordered_map<std::string, std::size_t> class_by_local_;
  std::unordered_map<std::string, std::size_t> relation_by_local_;

  std::vector<std::vector<bool>> class_leq_;
  std::vector<std::vector<bool>> relation_leq_;
  std::vector<std::vector<std::size_t>> class_ancestors_;
  std::vector<std::vector<std::size_t>> relation_ancestors_;
  std::vector<SlotTable> slot_tables_;
  std::vector<bool> slot_conflicts_;
  std::vector<Diagnostic> resolution_findings_;
};

struct BuildResult {
  std::optional<LexiconModel> model;
  std::vector<Diagnostic> diagnostics;
};

// Resolves parsed declarations. Graph statements are ignored. On any error
// (E010, E011, E020, E021, E050) no model is produced.
BuildResult build_model(std::span<const Statement> declarations);

// Convenience: parse + build. Parse diagnostics are included.
BuildResult build_model_from_text(std::string_view text, std::string file = "<input>");

// Undeclared names violate the contract and throw ContractError (E010/E011).
bool subsumes(const LexiconModel& model, const Qid& sub, const Qid& super);
bool subrel(const LexiconModel& model, const Qid& sub, const Qid& super);

// Effective ConP-slot table of a class, keyed by relation. Throws
// ContractError with E032 when the class has an unreconciled inheritance
// conflict.
SlotTable effective_slots(const LexiconModel& model, const Qid& cls);

ClassKind classify_class(const LexiconModel& model, const Qid& cls);

}  // namespace ilx

#endif  // ILX_MODEL_HPP
