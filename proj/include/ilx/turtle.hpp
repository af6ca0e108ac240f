#ifndef ILX_TURTLE_HPP
#define ILX_TURTLE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ilx/graph.hpp"
#include "ilx/model.hpp"

namespace ilx {

namespace vocab {
inline constexpr std::string_view kMetaNs = "http://ns.inria.fr/ulk/2011/06/10/ileximon-core#";
inline constexpr std::string_view kLexiconNs = "http://ns.inria.fr/ulk/2011/06/10/ilexicon-ex#";
inline constexpr std::string_view kDataNs = "http://ns.inria.fr/ulk/2011/06/10/sems-ex#";
inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

inline constexpr std::string_view kLexicalUnit = "ILexicalUnit";
inline constexpr std::string_view kSemRelation = "ISemRelation";
inline constexpr std::string_view kLexicalPrimitive = "ILexicalPrimitive";
inline constexpr std::string_view kOnSemanticRelation = "onISemanticRelation";
inline constexpr std::string_view kAllValuesFrom = "allValuesFrom";
inline constexpr std::string_view kIsObligatory = "isObligatory";
}  // namespace vocab

bool is_reserved_prefix(std::string_view label);

// Prefix label -> namespace IRI used for export.
class Namespaces {
 public:
  // Built-ins, then the model's explicit prefixes, then the overrides.
  static Namespaces for_model(const LexiconModel& model,
                              std::optional<std::string> lexicon_ns = std::nullopt,
                              std::optional<std::string> data_ns = std::nullopt);
  static Namespaces defaults();

  void bind(const std::string& label, const std::string& iri) { iri_by_label_[label] = iri; }
  const std::string& iri(const std::string& label) const;
  const std::map<std::string, std::string>& all() const { return iri_by_label_; }

 private:
  std::map<std::string, std::string> iri_by_label_;
};

std::string export_lexicon_turtle(const LexiconModel& model, const Namespaces& ns);
std::string export_lexicon_turtle(const LexiconModel& model);

std::string export_graph_turtle(const SemGraph& graph, bool include_derived, const Namespaces& ns);
std::string export_graph_turtle(const SemGraph& graph, bool include_derived);

// The meta-ontology document: ILexicalUnit, ISemRelation, ILexicalPrimitive
// and the three primitive-shape properties.
std::string meta_ontology_turtle();

}  // namespace ilx

#endif  // ILX_TURTLE_HPP
