#ifndef ILX_GRAPH_HPP
#define ILX_GRAPH_HPP

#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ilx/ast.hpp"
#include "ilx/diagnostic.hpp"
#include "ilx/qid.hpp"

namespace ilx {

class LexiconModel;

struct Edge {
  std::string subject;
  Qid relation;
  std::string object;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

using TypeAssertion = std::pair<std::string, Qid>;

// A semantic representation: lexical unit instances (nodes, identified by
// their local name in the data namespace) linked by semantic relations.
//
// Provenance: a fact is Asserted when it is the image of an asserted input
// fact under the node merge map, Derived otherwise. `representative` maps
// every node ever seen to its canonical node (identity when unmerged).
struct SemGraph {
  Qid name;
  std::map<std::string, std::set<Qid>> nodes;
  std::set<Edge> edges;
  std::set<TypeAssertion> asserted_types;
  std::set<Edge> asserted_edges;
  std::map<std::string, std::string> representative;

  void add_node(const std::string& id);
  void assert_type(const std::string& node, const Qid& cls);
  void assert_edge(const std::string& subject, const Qid& relation, const std::string& object);

  bool has_type(const std::string& node, const Qid& cls) const;
  bool has_edge(const std::string& subject, const Qid& relation, const std::string& object) const;
  bool is_asserted(const Edge& e) const { return asserted_edges.contains(e); }
  bool is_asserted(const TypeAssertion& t) const { return asserted_types.contains(t); }
  const std::string& canonical(const std::string& node) const;

  friend bool operator==(const SemGraph&, const SemGraph&) = default;
};

struct GraphBuildResult {
  std::vector<SemGraph> graphs;
  std::vector<Diagnostic> diagnostics;
};

// Turns `graph` blocks into SemGraphs. Node types must name declared classes
// (E100), edges declared relations (E101); offending graphs are dropped.
GraphBuildResult build_graphs(const LexiconModel& model, std::span<const Statement> statements);

// E100/E101 findings for an already-built graph.
std::vector<Diagnostic> check_graph_refs(const LexiconModel& model, const SemGraph& graph);

}  // namespace ilx

#endif  // ILX_GRAPH_HPP
