#include "ilx/turtle.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ilx {

namespace {

constexpr std::array<std::string_view, 5> kReserved = {"ileximon", "owl", "rdf", "rdfs", "xsd"};

// PN_LOCAL may not end in '.'; such names are written as full IRIs.
std::string term(const Namespaces& ns, const std::string& label, const std::string& local) {
  if (!local.empty() && local.back() != '.') return label + ":" + local;
  return "<" + ns.iri(label) + local + ">";
}

std::string term(const Namespaces& ns, const Qid& q) { return term(ns, q.prefix, q.local); }

std::string node_term(const Namespaces& ns, const std::string& node) {
  return term(ns, std::string(kDataPrefix), node);
}

void header(std::ostream& out, const Namespaces& ns) {
  for (const auto& [label, iri] : ns.all()) out << "@prefix " << label << ": <" << iri << "> .\n";
}

std::string list(const Namespaces& ns, const std::vector<Qid>& items) {
  std::string out = "(";
  for (const auto& q : items) out += " " + term(ns, q);
  return out + " )";
}

// Writes `subject p1 o1 ; p2 o2 .` with one predicate-object pair per line.
void block(std::ostream& out, const std::string& subject, const std::vector<std::string>& pairs) {
  if (pairs.empty()) return;
  out << subject << ' ' << pairs.front();
  for (std::size_t i = 1; i < pairs.size(); ++i) out << " ;\n    " << pairs[i];
  out << " .\n";
}

std::string primitive_node(const Namespaces& ns, const ConPSlot& slot) {
  std::ostringstream os;
  os << "[\n"
     << "        a ileximon:" << vocab::kLexicalPrimitive << " ;\n"
     << "        ileximon:" << vocab::kOnSemanticRelation << ' ' << term(ns, slot.relation) << " ;\n"
     << "        ileximon:" << vocab::kAllValuesFrom << ' ' << term(ns, slot.range) << " ;\n"
     << "        ileximon:" << vocab::kIsObligatory << " \"" << (slot.obligatory() ? "true" : "false")
     << "\"^^xsd:boolean\n"
     << "        # max 1: owl:" << (slot.obligatory() ? "qualifiedCardinality" : "maxQualifiedCardinality")
     << " 1 on " << term(ns, slot.relation) << "\n"
     << "    ]";
  return os.str();
}

}  // namespace

bool is_reserved_prefix(std::string_view label) {
  return std::find(kReserved.begin(), kReserved.end(), label) != kReserved.end();
}

Namespaces Namespaces::defaults() {
  Namespaces ns;
  ns.bind("ileximon", std::string(vocab::kMetaNs));
  ns.bind(std::string(kLexiconPrefix), std::string(vocab::kLexiconNs));
  ns.bind(std::string(kDataPrefix), std::string(vocab::kDataNs));
  ns.bind("rdf", std::string(vocab::kRdfNs));
  ns.bind("rdfs", std::string(vocab::kRdfsNs));
  ns.bind("owl", std::string(vocab::kOwlNs));
  ns.bind("xsd", std::string(vocab::kXsdNs));
  return ns;
}

Namespaces Namespaces::for_model(const LexiconModel& model, std::optional<std::string> lexicon_ns,
                                 std::optional<std::string> data_ns) {
  Namespaces ns = defaults();
  for (const auto& [label, iri] : model.prefixes()) ns.bind(label, iri);
  if (lexicon_ns) ns.bind(std::string(kLexiconPrefix), *lexicon_ns);
  if (data_ns) ns.bind(std::string(kDataPrefix), *data_ns);
  return ns;
}

const std::string& Namespaces::iri(const std::string& label) const { return iri_by_label_.at(label); }

std::string export_lexicon_turtle(const LexiconModel& model) {
  return export_lexicon_turtle(model, Namespaces::for_model(model));
}

std::string export_lexicon_turtle(const LexiconModel& model, const Namespaces& ns) {
  std::ostringstream out;
  header(out, ns);

  std::vector<const ClassDef*> classes;
  for (const auto& c : model.classes()) classes.push_back(&c);
  std::sort(classes.begin(), classes.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (const ClassDef* c : classes) {
    std::vector<std::string> pairs{"a owl:Class , ileximon:" + std::string(vocab::kLexicalUnit)};
    if (!c->parents.empty()) {
      std::string objects;
      for (const auto& p : c->parents) objects += (objects.empty() ? "" : " , ") + term(ns, p);
      pairs.push_back("rdfs:subClassOf " + objects);
    }
    if (!c->union_members.empty()) pairs.push_back("owl:unionOf " + list(ns, c->union_members));
    for (const auto& slot : c->declared_slots) pairs.push_back("rdfs:subClassOf " + primitive_node(ns, slot));
    out << '\n';
    block(out, term(ns, c->name), pairs);
  }

  std::vector<const RelationDef*> relations;
  for (const auto& r : model.relations()) relations.push_back(&r);
  std::sort(relations.begin(), relations.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (const RelationDef* r : relations) {
    std::vector<std::string> pairs{"a owl:ObjectProperty , ileximon:" + std::string(vocab::kSemRelation)};
    if (r->domain) pairs.push_back("rdfs:domain " + term(ns, *r->domain));
    if (r->range) pairs.push_back("rdfs:range " + term(ns, *r->range));
    std::vector<Qid> supers = r->super_relations;
    std::sort(supers.begin(), supers.end());
    if (!supers.empty()) {
      std::string objects;
      for (const auto& s : supers) objects += (objects.empty() ? "" : " , ") + term(ns, s);
      pairs.push_back("rdfs:subPropertyOf " + objects);
    }
    out << '\n';
    block(out, term(ns, r->name), pairs);
  }

  std::vector<const ChainAxiom*> chains;
  for (const auto& c : model.chains()) chains.push_back(&c);
  std::sort(chains.begin(), chains.end(), [](auto* a, auto* b) {
    return std::tie(a->super_relation, a->chain) < std::tie(b->super_relation, b->chain);
  });
  if (!chains.empty()) out << '\n';
  for (const ChainAxiom* c : chains)
    out << term(ns, c->super_relation) << " owl:propertyChainAxiom " << list(ns, c->chain) << " .\n";

  return out.str();
}

std::string export_graph_turtle(const SemGraph& graph, bool include_derived) {
  return export_graph_turtle(graph, include_derived, Namespaces::defaults());
}

std::string export_graph_turtle(const SemGraph& graph, bool include_derived, const Namespaces& ns) {
  std::ostringstream out;
  header(out, ns);

  std::map<std::string, std::vector<std::string>> by_subject;
  for (const auto& [node, types] : graph.nodes) {
    std::string objects;
    for (const auto& t : types) {
      if (!include_derived && !graph.is_asserted(TypeAssertion{node, t})) continue;
      objects += (objects.empty() ? "" : " , ") + term(ns, t);
    }
    if (!objects.empty()) by_subject[node].push_back("a " + objects);
  }
  // std::set<Edge> iterates by subject, relation, object.
  std::map<std::string, std::map<Qid, std::vector<std::string>>> edges;
  for (const auto& e : graph.edges) {
    if (!include_derived && !graph.is_asserted(e)) continue;
    edges[e.subject][e.relation].push_back(node_term(ns, e.object));
  }
  for (const auto& [subject, relations] : edges) {
    for (const auto& [rel, objects] : relations) {
      std::string joined;
      for (const auto& o : objects) joined += (joined.empty() ? "" : " , ") + o;
      by_subject[subject].push_back(term(ns, rel) + " " + joined);
    }
  }

  if (include_derived) {
    bool first = true;
    for (const auto& [node, rep] : graph.representative) {
      if (node == rep) continue;
      out << (first ? "\n" : "") << "# " << node_term(ns, node) << " merged into " << node_term(ns, rep) << '\n';
      first = false;
    }
  }
  for (const auto& [subject, pairs] : by_subject) {
    out << '\n';
    block(out, node_term(ns, subject), pairs);
  }
  return out.str();
}

std::string meta_ontology_turtle() {
  Namespaces ns;
  ns.bind("ileximon", std::string(vocab::kMetaNs));
  ns.bind("owl", std::string(vocab::kOwlNs));
  ns.bind("rdf", std::string(vocab::kRdfNs));
  ns.bind("rdfs", std::string(vocab::kRdfsNs));
  ns.bind("xsd", std::string(vocab::kXsdNs));
  std::ostringstream out;
  header(out, ns);
  std::string base(vocab::kMetaNs);
  base.pop_back();
  out << '\n' << '<' << base << "> a owl:Ontology .\n";

  out << "\nileximon:" << vocab::kLexicalUnit << " a owl:Class ;\n"
      << "    rdfs:subClassOf owl:Class ;\n"
      << "    rdfs:label \"interlingual lexical unit class\" .\n";
  out << "\nileximon:" << vocab::kSemRelation << " a owl:Class ;\n"
      << "    rdfs:subClassOf owl:ObjectProperty ;\n"
      << "    rdfs:label \"interlingual semantic relation\" .\n";
  out << "\nileximon:" << vocab::kLexicalPrimitive << " a owl:Class ;\n"
      << "    rdfs:subClassOf ileximon:" << vocab::kLexicalUnit << " ;\n"
      << "    rdfs:label \"interlingual lexical primitive class\" .\n";
  out << "\nileximon:" << vocab::kOnSemanticRelation << " a owl:ObjectProperty , owl:FunctionalProperty ;\n"
      << "    rdfs:domain ileximon:" << vocab::kLexicalPrimitive << " ;\n"
      << "    rdfs:range ileximon:" << vocab::kSemRelation << " .\n";
  out << "\nileximon:" << vocab::kAllValuesFrom << " a owl:ObjectProperty , owl:FunctionalProperty ;\n"
      << "    rdfs:domain ileximon:" << vocab::kLexicalPrimitive << " ;\n"
      << "    rdfs:range ileximon:" << vocab::kLexicalUnit << " .\n";
  out << "\nileximon:" << vocab::kIsObligatory << " a owl:DatatypeProperty , owl:FunctionalProperty ;\n"
      << "    rdfs:domain ileximon:" << vocab::kLexicalPrimitive << " ;\n"
      << "    rdfs:range xsd:boolean .\n";
  return out.str();
}

}  // namespace ilx
