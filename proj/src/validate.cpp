#include "ilx/validate.hpp"

#include <map>
#include <set>

namespace ilx {

std::vector<Diagnostic> validate_lexicon(const LexiconModel& model) {
  std::vector<Diagnostic> out(model.resolution_findings().begin(), model.resolution_findings().end());

  for (const auto& c : model.classes()) {
    if (classify_class(model, c.name) == ClassKind::SemanticallyVoid) {
      out.push_back(Diagnostic::warning(codes::kVoidClass, c.name.str(),
                                        "class has no parent and no slot; it is semantically void",
                                        c.span));
    }
  }

  std::set<Qid> used;
  for (const auto& c : model.classes())
    for (const auto& s : c.declared_slots) used.insert(s.relation);
  for (const auto& chain : model.chains()) {
    used.insert(chain.chain.begin(), chain.chain.end());
    used.insert(chain.super_relation);
  }
  for (const auto& r : model.relations()) {
    if (r.super_relations.empty()) continue;
    used.insert(r.name);
    used.insert(r.super_relations.begin(), r.super_relations.end());
  }
  for (const auto& r : model.relations()) {
    if (!used.contains(r.name)) {
      out.push_back(Diagnostic::warning(codes::kUnusedRelation, r.name.str(),
                                        "relation is not used by any slot, chain or sub-relation axiom",
                                        r.span));
    }
  }

  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> validate_graph(const LexiconModel& model, const SemGraph& saturated,
                                       GraphCheckMode mode) {
  std::vector<Diagnostic> out;

  std::map<std::string, std::map<Qid, std::vector<std::string>>> fillers;
  for (const auto& e : saturated.edges) fillers[e.subject][e.relation].push_back(e.object);

  for (const auto& [node, types] : saturated.nodes) {
    const std::string subject = Qid::data(node).str();
    const auto node_fillers = fillers.find(node);
    auto objects_of = [&](const Qid& rel) -> const std::vector<std::string>* {
      if (node_fillers == fillers.end()) return nullptr;
      auto it = node_fillers->second.find(rel);
      return it == node_fillers->second.end() ? nullptr : &it->second;
    };

    // Several types of one node may carry the same slot; report once.
    std::set<Qid> checked;
    for (const auto& type : types) {
      const auto c = model.class_index(type);
      if (!c) continue;
      for (const auto& [rel, slot] : model.slot_table(*c)) {
        if (!checked.insert(rel).second) continue;
        const auto* objects = objects_of(rel);
        if (!objects) {
          if (slot.obligatory()) {
            out.push_back(Diagnostic::error(codes::kMissingFiller, subject,
                                            "no filler for obligatory slot (" + rel.local + ") -> 1 " +
                                                slot.range.local + " of " + type.local));
          }
          continue;
        }
        if (objects->size() > 1) {
          out.push_back(Diagnostic::error(codes::kInternal, subject,
                                          "max-1 slot (" + rel.local + ") of " + type.local + " has " +
                                              std::to_string(objects->size()) + " fillers after saturation"));
        }
        if (mode != GraphCheckMode::Strict) continue;
        // A filler must satisfy the slot range of every type of the node.
        for (const auto& o : *objects) {
          const auto it = saturated.nodes.find(o);
          for (const auto& t2 : types) {
            const auto c2 = model.class_index(t2);
            if (!c2) continue;
            const auto s2 = model.slot_table(*c2).find(rel);
            if (s2 == model.slot_table(*c2).end()) continue;
            bool typed = false;
            if (it != saturated.nodes.end())
              for (const auto& t : it->second) typed = typed || subsumes(model, t, s2->second.range);
            if (!typed) {
              out.push_back(Diagnostic::error(codes::kFillerType, subject,
                                              "filler " + o + " of (" + rel.local + ") is not known to be a " +
                                                  s2->second.range.local + " as required by " + t2.local));
              break;
            }
          }
        }
      }
    }
  }
  sort_diagnostics(out);
  return out;
}

}  // namespace ilx
