#include "ilx/graph.hpp"

#include <set>

#include "ilx/model.hpp"

namespace ilx {

void SemGraph::add_node(const std::string& id) {
  nodes.try_emplace(id);
  representative.try_emplace(id, id);
}

void SemGraph::assert_type(const std::string& node, const Qid& cls) {
  add_node(node);
  nodes[node].insert(cls);
  asserted_types.insert({node, cls});
}

void SemGraph::assert_edge(const std::string& subject, const Qid& relation, const std::string& object) {
  add_node(subject);
  add_node(object);
  Edge e{subject, relation, object};
  edges.insert(e);
  asserted_edges.insert(std::move(e));
}

bool SemGraph::has_type(const std::string& node, const Qid& cls) const {
  auto it = nodes.find(canonical(node));
  return it != nodes.end() && it->second.contains(cls);
}

bool SemGraph::has_edge(const std::string& subject, const Qid& relation, const std::string& object) const {
  return edges.contains({canonical(subject), relation, canonical(object)});
}

const std::string& SemGraph::canonical(const std::string& node) const {
  auto it = representative.find(node);
  return it == representative.end() ? node : it->second;
}

GraphBuildResult build_graphs(const LexiconModel& model, std::span<const Statement> statements) {
  GraphBuildResult result;
  std::set<std::string> seen;
  for (const auto& s : statements) {
    const auto* g = std::get_if<GraphDecl>(&s.payload);
    if (!g) continue;
    const Qid name = Qid::data(g->name.text);
    if (!seen.insert(g->name.text).second) {
      result.diagnostics.push_back(
          Diagnostic::error(codes::kDuplicate, name.str(), "graph defined twice", g->name.span));
      continue;
    }
    bool ok = true;
    SemGraph graph;
    graph.name = name;
    for (const auto& n : g->nodes) {
      const Qid cls = Qid::lexicon(n.type.text);
      if (!model.find_class(cls)) {
        result.diagnostics.push_back(Diagnostic::error(
            codes::kGraphUnknownClass, Qid::data(n.node.text).str(),
            "node type '" + n.type.text + "' is not a declared class", n.type.span));
        ok = false;
        continue;
      }
      graph.assert_type(n.node.text, cls);
    }
    for (const auto& e : g->edges) {
      const Qid rel = Qid::lexicon(e.relation.text);
      if (!model.find_relation(rel)) {
        result.diagnostics.push_back(Diagnostic::error(
            codes::kGraphUnknownRelation, Qid::data(e.subject.text).str(),
            "edge relation '" + e.relation.text + "' is not a declared relation", e.relation.span));
        ok = false;
        continue;
      }
      graph.assert_edge(e.subject.text, rel, e.object.text);
    }
    if (ok) result.graphs.push_back(std::move(graph));
  }
  sort_diagnostics(result.diagnostics);
  return result;
}

std::vector<Diagnostic> check_graph_refs(const LexiconModel& model, const SemGraph& graph) {
  std::vector<Diagnostic> out;
  for (const auto& [node, types] : graph.nodes) {
    for (const auto& t : types) {
      if (!model.find_class(t)) {
        out.push_back(Diagnostic::error(codes::kGraphUnknownClass, Qid::data(node).str(),
                                        "node type '" + t.str() + "' is not a declared class"));
      }
    }
  }
  for (const auto& e : graph.edges) {
    if (!model.find_relation(e.relation)) {
      out.push_back(Diagnostic::error(codes::kGraphUnknownRelation, Qid::data(e.subject).str(),
                                      "edge relation '" + e.relation.str() + "' is not a declared relation"));
    }
  }
  return out;
}

}  // namespace ilx
