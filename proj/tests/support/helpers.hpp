#ifndef ILX_TESTS_HELPERS_HPP
#define ILX_TESTS_HELPERS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ilx/diagnostic.hpp"
#include "ilx/graph.hpp"
#include "ilx/model.hpp"
#include "ilx/parser.hpp"

namespace ilx::testing {

inline LexiconModel model_of(std::string_view text) {
  BuildResult r = build_model_from_text(text);
  if (!r.model) {
    std::string why;
    for (const auto& d : r.diagnostics) why += render(d) + "\n";
    throw std::runtime_error("model did not build:\n" + why);
  }
  return std::move(*r.model);
}

// Graph block(s) parsed against `model`; the first graph is returned.
inline SemGraph graph_of(const LexiconModel& model, std::string_view text) {
  ParseResult p = parse(text);
  GraphBuildResult g = build_graphs(model, p.statements);
  if (!p.diagnostics.empty() || !g.diagnostics.empty() || g.graphs.empty())
    throw std::runtime_error("graph did not build");
  return g.graphs.front();
}

inline std::vector<std::string> codes_of(const std::vector<Diagnostic>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.code);
  return out;
}

inline std::vector<std::string> error_codes(const std::vector<Diagnostic>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds)
    if (d.is_error()) out.push_back(d.code);
  return out;
}

inline std::size_t count_code(const std::vector<Diagnostic>& ds, std::string_view code) {
  return static_cast<std::size_t>(std::count_if(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == code; }));
}

inline Qid L(const std::string& local) { return Qid::lexicon(local); }

}  // namespace ilx::testing

#endif
