#include "ilx/fixtures.hpp"

#include <stdexcept>

#include "ilx/parser.hpp"

namespace ilx {

namespace embedded {
extern const char* const kFixtureLexicon;
extern const char* const kFixtureGraphs;
}  // namespace embedded

std::string_view fixture_lexicon_text() { return embedded::kFixtureLexicon; }
std::string_view fixture_graphs_text() { return embedded::kFixtureGraphs; }

LexiconModel fixture_lexicon() {
  BuildResult built = build_model_from_text(fixture_lexicon_text(), "fixtures/ilexicon.ilx");
  if (!built.model) throw std::logic_error("bundled fixture lexicon does not build");
  return std::move(*built.model);
}

std::vector<SemGraph> fixture_graphs() {
  const LexiconModel model = fixture_lexicon();
  ParseResult parsed = parse(fixture_graphs_text(), "fixtures/graphs.ilx");
  GraphBuildResult graphs = build_graphs(model, parsed.statements);
  if (has_errors(parsed.diagnostics) || has_errors(graphs.diagnostics))
    throw std::logic_error("bundled fixture graphs do not build");
  return std::move(graphs.graphs);
}

}  // namespace ilx
