#include <algorithm>
#include <sstream>
#include <vector>

#include "ilx/model.hpp"
#include "ilx/parser.hpp"

namespace ilx {

namespace {

std::string join(const std::vector<Qid>& names, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i].local;
  }
  return out;
}

}  // namespace

std::string pretty_print(const LexiconModel& model) {
  std::vector<std::string> sections;

  std::ostringstream prefixes;
  for (const auto& [label, iri] : model.prefixes()) prefixes << "@prefix " << label << ": <" << iri << ">\n";
  sections.push_back(prefixes.str());

  std::ostringstream relations;
  for (const auto& r : model.relations()) {
    if (r.super_relations.empty()) relations << "rel " << r.name.local << '\n';
    for (const auto& s : r.super_relations) relations << "rel " << r.name.local << " < " << s.local << '\n';
  }
  for (const auto& c : model.chains())
    relations << "rel " << join(c.chain, "/") << " < " << c.super_relation.local << '\n';
  sections.push_back(relations.str());

  std::ostringstream classes;
  for (const auto& c : model.classes()) {
    classes << "class " << c.name.local;
    if (!c.parents.empty()) classes << " < " << join(c.parents, " & ");
    if (!c.union_members.empty()) classes << " = " << join(c.union_members, " | ");
    if (!c.declared_slots.empty()) {
      std::vector<const ConPSlot*> slots;
      for (const auto& s : c.declared_slots) slots.push_back(&s);
      std::sort(slots.begin(), slots.end(),
                [](const ConPSlot* a, const ConPSlot* b) { return a->relation < b->relation; });
      classes << " {\n";
      for (const ConPSlot* s : slots) {
        classes << "  " << (s->sets_domain_range ? "!" : "") << '(' << s->relation.local << ") -> "
                << (s->obligatory() ? "1" : "?") << ' ' << s->range.local << '\n';
      }
      classes << '}';
    }
    classes << '\n';
  }
  sections.push_back(classes.str());

  std::string out;
  for (const auto& s : sections) {
    if (s.empty()) continue;
    if (!out.empty()) out += '\n';
    out += s;
  }
  return out;
}

}  // namespace ilx
