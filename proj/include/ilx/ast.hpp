#ifndef ILX_AST_HPP
#define ILX_AST_HPP

#include <string>
#include <variant>
#include <vector>

#include "ilx/diagnostic.hpp"

namespace ilx {

enum class Cardinality { ExactlyOne, AtMostOne };

struct Name {
  std::string text;
  SourceSpan span;
};

struct PrefixDecl {
  Name label;
  std::string iri;
};

// `rel a/b < c < d`: head of length >= 2 is a chain axiom into the first
// right-hand name; each right-hand name is a sub-relation of its right
// neighbour.
struct RelationDecl {
  std::vector<Name> head;
  std::vector<Name> supers;
};

struct SlotDecl {
  Name relation;
  Name range;
  Cardinality cardinality = Cardinality::ExactlyOne;
  bool sets_domain_range = false;
  SourceSpan span;
};

struct ClassDecl {
  Name name;
  std::vector<Name> parents;
  std::vector<Name> union_members;
  std::vector<SlotDecl> slots;
};

struct NodeDecl {
  Name node;
  Name type;
};

struct EdgeDecl {
  Name subject;
  Name relation;
  Name object;
};

struct GraphDecl {
  Name name;
  std::vector<NodeDecl> nodes;
  std::vector<EdgeDecl> edges;
};

enum class StatementKind { Prefix, Relation, Class, Graph };

struct Statement {
  std::variant<PrefixDecl, RelationDecl, ClassDecl, GraphDecl> payload;
  SourceSpan span;

  StatementKind kind() const { return static_cast<StatementKind>(payload.index()); }
};

}  // namespace ilx

#endif  // ILX_AST_HPP
